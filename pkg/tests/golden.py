"""Golden values frozen from tests/oracles/generate_golden.py (50-digit mpmath)."""

SI_PI = 1.851937051982466170361053
SIGMA_1 = 0.5894898722360836351160144
SIGMA_3 = 0.5330932376182719825487899
SIGMA_5 = 0.5201071641913085173598247
C_CONST_1_1_3_5 = 3.035472984750824117229404
RHO_0_05 = 2.197179238477711434990638
PHI01_T1 = 0.9756839820363734728635277
DIST_B01_T2 = 0.00001126140376920356755018185
PHI01_INV_0_9 = 0.6521735687711799350031363
BETA_HALF_3 = 1.066666666666666666666667
BOUND_EX1_H025_E1 = 1.166019302227841219673037
BOUND_EX1_H025_E2 = 0.2328730089590659780171749
BOUND_EX1_H025_ABS = 1.398892311186907197690212
EXACT_EX1 = 0.2716908296429326889300735
QUAD_EX1 = 0.2716908296429326889300735
QUAD_EX2 = 0.6666666666666666666666667
QUAD_EX3 = 3.141592653589793238462643
