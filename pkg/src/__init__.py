# q-series congruence toolkit
