"""
KASKAD-7 Hata Sınıfları
Yapılandırma hataları çıkış kodu 1, sayısal hatalar çıkış kodu 2 ile biter.
"""


class KaskadError(Exception):
    """Tüm KASKAD-7 hatalarının ortak atası"""

    exit_code = 1


class ConfigError(KaskadError):
    """Geçersiz girdi, yapılandırma veya doğrulama hatası"""

    exit_code = 1


class ForceSyntaxError(ConfigError):
    """Kuvvet ifadesi dilbilgisine uymuyor"""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (konum {position})")


class ConstraintViolation(ConfigError):
    """α+β+γ+δ = 60 kısıtı sağlanmıyor"""

    def __init__(self, total):
        self.total = total
        super().__init__(f"α+β+γ+δ = {total} (60 olmalı)")


class SingularThetaError(ConfigError):
    """θ = 0 veya sin θ = 0: kapalı formlar tanımsız"""


class GridTooSmallError(ConfigError):
    """Uç koşullar için düğüm sayısı yetersiz"""


class UnsupportedOrderError(ConfigError):
    """Spline çözücü yalnızca 7. mertebe problemleri destekler"""


class UnsupportedCascadeError(ConfigError):
    """Çift N için kaskad indirgemesi desteklenmiyor"""


class EndConditionError(ConfigError):
    """Uç koşul satırı belirsiz katsayılar yöntemiyle yeniden türetilemedi"""


class NumericalError(KaskadError):
    """Sayısal çözüm başarısız"""

    exit_code = 2


class SingularSystemError(NumericalError):
    """Doğrusal sistem sayısal olarak tekil"""
