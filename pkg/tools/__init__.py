"""
KASKAD-7 Alt Komutları
Registry Sistemi ile Otomatik Kayıt
"""
from .registry import registry

__all__ = ['registry']
