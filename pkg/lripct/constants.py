__copyright__ = "Copyright 2024, The lripct developers"
__license__ = "3-clause BSD"


MAXINT = 2**31 - 1
VERY_SMALL_NUMBER = 1e-10  # Relative singular-value cutoff and guard against dividing by zero

# Default explicit-matrix budget, counted as M x N (dense equivalent) entries
MATRIX_BUDGET = 40_000_000

# Structural similarity constants
SSIM_K1 = 0.01
SSIM_K2 = 0.03
SSIM_SIGMA = 1.5
SSIM_WINDOW = 11

# Environment variable capping the number of parallel workers
THREADS_ENV = "LRIPCT_THREADS"
