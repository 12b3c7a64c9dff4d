"""
Sürücü Kuvvetler - Kapalı formda ifadeler
Her terim c·t^m·e^{a t}·{1|sin|cos}(b t + φ) biçimindedir; ifade terimlerin toplamıdır.
Türev kesin olarak (çarpım kuralı) alınır, katsayılar Fraction olarak korunur.
"""
import logging
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Real
from typing import Dict, Iterable, List, NamedTuple, Tuple

import numpy as np

from core.exceptions import ForceSyntaxError, NumericalError

logger = logging.getLogger(__name__)

TRIG_NONE = "none"
TRIG_SIN = "sin"
TRIG_COS = "cos"
TRIG_ORDER = {TRIG_NONE: 0, TRIG_SIN: 1, TRIG_COS: 2}


@dataclass(frozen=True)
class ForceTerm:
    """c·t^m·e^{a t}·trig(b t + φ)"""

    coeff: Real
    poly_power: int = 0
    exp_rate: Real = 0
    trig: str = TRIG_NONE
    trig_freq: Real = 0
    trig_phase: Real = 0

    def __post_init__(self):
        if not isinstance(self.poly_power, int) or self.poly_power < 0:
            raise ValueError(f"poly_power negatif olmayan tamsayı olmalı: {self.poly_power}")
        if self.trig not in TRIG_ORDER:
            raise ValueError(f"Bilinmeyen trig türü: {self.trig}")
        if self.trig == TRIG_NONE and (self.trig_freq != 0 or self.trig_phase != 0):
            raise ValueError("trig yokken frekans ve faz sıfır olmalı")
        for value in (self.coeff, self.exp_rate, self.trig_freq, self.trig_phase):
            if not math.isfinite(value):
                raise ValueError(f"Sonlu olmayan katsayı: {value}")

    @property
    def shape(self) -> Tuple:
        """Birleştirme anahtarı: katsayı dışındaki her şey"""
        return (self.poly_power, self.exp_rate, self.trig, self.trig_freq, self.trig_phase)

    def sort_key(self) -> Tuple:
        return (
            self.poly_power,
            float(self.exp_rate),
            TRIG_ORDER[self.trig],
            float(self.trig_freq),
            float(self.trig_phase),
        )

    def with_coeff(self, coeff: Real) -> "ForceTerm":
        return ForceTerm(coeff, *self.shape)

    def __call__(self, t: Real) -> Real:
        # Polinom terimlerde Fraction girdisi kesin sonuç verir
        value = self.coeff * t ** self.poly_power
        if self.exp_rate != 0:
            try:
                value = value * math.exp(self.exp_rate * t)
            except OverflowError:
                raise NumericalError(f"exp({format_number(self.exp_rate)}·t) t={float(t):g} noktasında taşıyor")
        if self.trig == TRIG_SIN:
            value = value * math.sin(self.trig_freq * t + self.trig_phase)
        elif self.trig == TRIG_COS:
            value = value * math.cos(self.trig_freq * t + self.trig_phase)
        return value

    def evaluate_many(self, ts: np.ndarray) -> np.ndarray:
        values = float(self.coeff) * ts ** self.poly_power
        if self.exp_rate != 0:
            values = values * np.exp(float(self.exp_rate) * ts)
        if self.trig == TRIG_SIN:
            values = values * np.sin(float(self.trig_freq) * ts + float(self.trig_phase))
        elif self.trig == TRIG_COS:
            values = values * np.cos(float(self.trig_freq) * ts + float(self.trig_phase))
        return values

    def derivative_terms(self) -> List["ForceTerm"]:
        """Çarpım kuralı: polinom, üstel ve trig çarpanlarının türevleri"""
        terms = []
        m, a, trig, b, phi = self.shape
        if m > 0:
            terms.append(ForceTerm(self.coeff * m, m - 1, a, trig, b, phi))
        if a != 0:
            terms.append(ForceTerm(self.coeff * a, m, a, trig, b, phi))
        if trig == TRIG_SIN:
            terms.append(ForceTerm(self.coeff * b, m, a, TRIG_COS, b, phi))
        elif trig == TRIG_COS:
            terms.append(ForceTerm(-self.coeff * b, m, a, TRIG_SIN, b, phi))
        return terms

    def factors_text(self) -> List[str]:
        """Katsayı hariç çarpanların metni"""
        factors = []
        if self.poly_power == 1:
            factors.append("t")
        elif self.poly_power > 1:
            factors.append(f"t^{self.poly_power}")
        if self.exp_rate != 0:
            factors.append(f"exp({_linear_text(self.exp_rate)})")
        if self.trig != TRIG_NONE:
            argument = _linear_text(self.trig_freq)
            if self.trig_phase > 0:
                argument += f"+{exact_text(self.trig_phase)}"
            elif self.trig_phase < 0:
                argument += f"-{exact_text(-self.trig_phase)}"
            factors.append(f"{self.trig}({argument})")
        return factors


@dataclass(frozen=True)
class ForceExpr:
    """ForceTerm toplamı; of() ile kurulan ifade normal formdadır"""

    terms: Tuple[ForceTerm, ...] = ()

    @classmethod
    def of(cls, terms: Iterable[ForceTerm]) -> "ForceExpr":
        """Aynı biçimli terimleri birleştir, sıfırları at, sırala"""
        merged: Dict[Tuple, Real] = {}
        for term in terms:
            merged[term.shape] = merged.get(term.shape, 0) + term.coeff
        kept = [ForceTerm(coeff, *shape) for shape, coeff in merged.items() if coeff != 0]
        kept.sort(key=ForceTerm.sort_key)
        return cls(tuple(kept))

    @classmethod
    def zero(cls) -> "ForceExpr":
        return cls(())

    @classmethod
    def constant(cls, value: Real) -> "ForceExpr":
        return cls.of([ForceTerm(value)])

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __call__(self, t: Real) -> Real:
        return sum((term(t) for term in self.terms), 0)

    def evaluate_many(self, ts) -> np.ndarray:
        ts = np.asarray(ts, dtype=float)
        values = np.zeros_like(ts)
        for term in self.terms:
            values += term.evaluate_many(ts)
        return values

    def derivative(self, order: int = 1) -> "ForceExpr":
        if order < 0:
            raise ValueError(f"Türev mertebesi negatif olamaz: {order}")
        expr = self
        for _ in range(order):
            expr = ForceExpr.of(t for term in expr.terms for t in term.derivative_terms())
        return expr

    def scale(self, factor: Real) -> "ForceExpr":
        return ForceExpr.of(term.with_coeff(term.coeff * factor) for term in self.terms)

    def __add__(self, other) -> "ForceExpr":
        if isinstance(other, Real):
            other = ForceExpr.constant(other)
        if not isinstance(other, ForceExpr):
            return NotImplemented
        return ForceExpr.of(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self) -> "ForceExpr":
        return self.scale(-1)

    def __sub__(self, other) -> "ForceExpr":
        if isinstance(other, Real):
            other = ForceExpr.constant(other)
        if not isinstance(other, ForceExpr):
            return NotImplemented
        return self + (-other)

    def __mul__(self, factor) -> "ForceExpr":
        if not isinstance(factor, Real):
            return NotImplemented
        return self.scale(factor)

    __rmul__ = __mul__

    def to_text(self) -> str:
        """Ayrıştırıcının geri okuyabildiği metin; float katsayılar p/q olarak yazılır"""
        if self.is_zero:
            return "0"
        pieces = []
        for index, term in enumerate(self.terms):
            negative = term.coeff < 0
            magnitude = -term.coeff if negative else term.coeff
            factors = term.factors_text()
            if magnitude != 1 or not factors:
                factors.insert(0, exact_text(magnitude))
            body = "*".join(factors)
            if index == 0:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f" - {body}" if negative else f" + {body}")
        return "".join(pieces)

    def __str__(self) -> str:
        return self.to_text()


def format_number(value: Real) -> str:
    """Fraction → 'p/q', tamsayı → 'k', float → repr"""
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, int):
        return str(value)
    return repr(float(value))


def exact_text(value: Real) -> str:
    """to_text için: float da tam rasyonel değeriyle yazılır, parse_force aynı sayıyı geri okur"""
    if isinstance(value, float):
        value = Fraction(value)
    return format_number(value)


def _linear_text(rate: Real) -> str:
    if rate == 1:
        return "t"
    if rate == -1:
        return "-t"
    if rate < 0:
        return f"-{exact_text(-rate)}*t"
    return f"{exact_text(rate)}*t"


# ============================================
# AYRIŞTIRICI
# ============================================

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)"
    r"|(?P<name>[A-Za-z_]\w*)"
    r"|(?P<op>[-+*/^()]))"
)


class _Token(NamedTuple):
    kind: str
    text: str
    position: int


def _tokenize(text: str) -> List[_Token]:
    tokens = []
    position = 0
    while True:
        while position < len(text) and text[position].isspace():
            position += 1
        if position >= len(text):
            break
        match = _TOKEN_RE.match(text, position)
        if match is None:
            raise ForceSyntaxError(f"beklenmeyen karakter '{text[position]}'", position)
        kind = match.lastgroup
        tokens.append(_Token(kind, match.group(kind), match.start(kind)))
        position = match.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _TermBuilder:
    def __init__(self, sign: int):
        self.coeff = Fraction(sign)
        self.power = 0
        self.rate = Fraction(0)
        self.trig = TRIG_NONE
        self.freq = Fraction(0)
        self.phase = Fraction(0)

    def build(self) -> ForceTerm:
        return ForceTerm(self.coeff, self.power, self.rate, self.trig, self.freq, self.phase)


class _ForceParser:
    """Özyinelemeli iniş: expr := ['+'|'-'] term (('+'|'-') term)*, term := factor ('*' factor)*"""

    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.index = 0

    def _peek(self) -> _Token:
        return self.tokens[self.index]

    def _next(self) -> _Token:
        token = self.tokens[self.index]
        if token.kind != "end":
            self.index += 1
        return token

    def _peek_op(self, *symbols: str) -> bool:
        token = self._peek()
        return token.kind == "op" and token.text in symbols

    def _expect_op(self, symbol: str) -> _Token:
        token = self._next()
        if token.kind != "op" or token.text != symbol:
            raise ForceSyntaxError(f"'{symbol}' bekleniyordu", token.position)
        return token

    def parse(self) -> ForceExpr:
        if self._peek().kind == "end":
            raise ForceSyntaxError("boş ifade", 0)
        sign = 1
        if self._peek_op("+", "-"):
            sign = -1 if self._next().text == "-" else 1
        terms = [self._term(sign)]
        while self._peek_op("+", "-"):
            sign = -1 if self._next().text == "-" else 1
            terms.append(self._term(sign))
        token = self._peek()
        if token.kind != "end":
            raise ForceSyntaxError(f"beklenmeyen simge '{token.text}'", token.position)
        return ForceExpr.of(terms)

    def _term(self, sign: int) -> ForceTerm:
        builder = _TermBuilder(sign)
        self._factor(builder)
        while self._peek_op("*"):
            self._next()
            self._factor(builder)
        return builder.build()

    def _number(self) -> Fraction:
        token = self._next()
        if token.kind != "number":
            raise ForceSyntaxError("sayı bekleniyordu", token.position)
        value = Fraction(token.text)
        if self._peek_op("/"):
            self._next()
            denominator = self._next()
            if denominator.kind != "number":
                raise ForceSyntaxError("payda bekleniyordu", denominator.position)
            if Fraction(denominator.text) == 0:
                raise ForceSyntaxError("sıfıra bölme", denominator.position)
            value /= Fraction(denominator.text)
        return value

    def _linear_rate(self) -> Fraction:
        """[-] [sayı '*'] t"""
        sign = 1
        if self._peek_op("-"):
            self._next()
            sign = -1
        value = Fraction(1)
        if self._peek().kind == "number":
            value = self._number()
            self._expect_op("*")
        token = self._next()
        if token.kind != "name" or token.text != "t":
            raise ForceSyntaxError("'t' bekleniyordu", token.position)
        return sign * value

    def _factor(self, builder: _TermBuilder):
        token = self._peek()
        if token.kind == "number":
            builder.coeff *= self._number()
            return

        self._next()
        if token.kind != "name":
            raise ForceSyntaxError("çarpan bekleniyordu", token.position)

        if token.text == "t":
            power = 1
            if self._peek_op("^"):
                self._next()
                exponent = self._next()
                if exponent.kind != "number" or not exponent.text.isdigit():
                    raise ForceSyntaxError("üs negatif olmayan tamsayı olmalı", exponent.position)
                power = int(exponent.text)
            builder.power += power
        elif token.text == "exp":
            self._expect_op("(")
            builder.rate += self._linear_rate()
            self._expect_op(")")
        elif token.text in (TRIG_SIN, TRIG_COS):
            if builder.trig != TRIG_NONE:
                raise ForceSyntaxError("iki trigonometrik çarpan desteklenmiyor", token.position)
            self._expect_op("(")
            builder.freq = self._linear_rate()
            if self._peek_op("+", "-"):
                sign = -1 if self._next().text == "-" else 1
                builder.phase = sign * self._number()
            self._expect_op(")")
            builder.trig = token.text
        else:
            raise ForceSyntaxError(f"bilinmeyen fonksiyon '{token.text}'", token.position)


def parse_force(text: str) -> ForceExpr:
    """Metni ForceExpr'e çevir"""
    if not isinstance(text, str):
        raise ForceSyntaxError(f"metin bekleniyordu, {type(text).__name__} geldi", 0)
    expr = _ForceParser(text).parse()
    logger.debug(f"🧮 Kuvvet ayrıştırıldı: {expr.to_text()}")
    return expr
