"""
KASKAD-7 Depolama
JSON yapılandırma okuma ve CSV sonuç yazma
"""

from .config_loader import RunConfig, load_config
from .result_writer import ResultWriter

__all__ = ['RunConfig', 'load_config', 'ResultWriter']
