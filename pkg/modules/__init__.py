"""
KASKAD-7 Modülleri
Kaskad indirgemesi ve RK kahini
"""

from .cascade import CascadeModel, reduce, simulate_direct
from .oracle import EXAMPLES, convergence_study, max_abs_error, rk_solve

__all__ = ['CascadeModel', 'reduce', 'simulate_direct', 'EXAMPLES', 'convergence_study', 'max_abs_error', 'rk_solve']
