# Shared helpers: primes, data file lookup
