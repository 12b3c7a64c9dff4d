"""
Uç Koşullar - İlk altı satır
Her satır: Σ u_j U_j = h^-7 [Σ c_j y_j + Σ e_k h^k y_0^(k)]
Yayımlanan katsayılar olduğu gibi saklanır; moment kontrolünden geçemeyen satırların
sağ tarafı belirsiz katsayılar yöntemiyle kesin rasyonel aritmetikte yeniden türetilir.
"""
import logging
import math
from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Tuple, Union

from core.exceptions import EndConditionError

logger = logging.getLogger(__name__)

F = Fraction

STANDARD_EXACT_DEGREE = 8
IMPROVED_EXACT_DEGREE = 12
MAX_DERIVATIVE_ORDER = 7
SEVENTH = 7


class EndConditionMode(str, Enum):
    STANDARD = "standard"
    IMPROVED = "improved"


@dataclass(frozen=True)
class RowStencil:
    """Tek bir satırın katsayıları (knot indeksi → kesin rasyonel)"""

    label: str
    u_coeffs: Dict[int, Fraction]
    y_coeffs: Dict[int, Fraction]
    deriv_coeffs: Dict[int, Fraction] = field(default_factory=dict)

    @property
    def last_knot(self) -> int:
        return max(max(self.u_coeffs), max(self.y_coeffs, default=0))

    def describe(self) -> str:
        u = " + ".join(f"({c})U{j}" for j, c in sorted(self.u_coeffs.items()))
        y = " + ".join(f"({c})y{j}" for j, c in sorted(self.y_coeffs.items()))
        d = " + ".join(f"({c})h^{k}y0^({k})" for k, c in sorted(self.deriv_coeffs.items()))
        return f"{self.label}: {u} = h^-7 [{y}{' + ' + d if d else ''}]"


Mode = Union[EndConditionMode, str]


def exact_degree(mode: Mode) -> int:
    mode = EndConditionMode(mode)
    return STANDARD_EXACT_DEGREE if mode == EndConditionMode.STANDARD else IMPROVED_EXACT_DEGREE


def min_knots(mode: Mode) -> int:
    """Uç satırların başvurduğu en büyük indeks"""
    return max(row.last_knot for row in published_rows(mode))


# ============================================
# YAYIMLANAN SATIRLAR
# ============================================

_STANDARD_ROWS = (
    RowStencil(
        "standard-1",
        {0: F(1), 1: F(-10), 4: F(1)},
        {0: F(512540, 27), 1: F(-20160), 2: F(1260), 3: F(-2240, 27)},
        {1: F(161000, 9), 2: F(23800, 3), 3: F(6160, 3), 4: F(280)},
    ),
    RowStencil(
        "standard-2",
        {1: F(1), 2: F(-30666, 8867), 5: F(1)},
        {1: F(-957600, 8867), 2: F(1048320, 8867), 3: F(-90720, 8867)},
        {
            1: F(-866880, 8867),
            2: F(-1209600, 8867),
            3: F(-829920, 8867),
            4: F(-352800, 8867),
            5: F(-87864, 8867),
        },
    ),
    RowStencil(
        "standard-3",
        {2: F(1), 3: F(-278026, 94221), 6: F(1)},
        {2: F(-67340, 10469), 3: F(80640, 10469), 4: F(-700, 551)},
        {
            1: F(-54040, 10469),
            2: F(-4200, 361),
            3: F(-20720, 1653),
            4: F(-85400, 10469),
            5: F(-95536, 31407),
        },
    ),
    RowStencil(
        "standard-4",
        {3: F(1), 7: F(1)},
        {3: F(10808537040, 487056529), 4: F(-13373418240, 487056529), 5: F(2564881200, 487056529)},
        {
            1: F(8243655840, 487056529),
            2: F(26287914240, 487056529),
            3: F(40576352880, 487056529),
            4: F(39377200800, 487056529),
            5: F(25438766892, 487056529),
            6: F(9474762304, 487056529),
        },
    ),
    RowStencil(
        "standard-5",
        {4: F(1), 8: F(1)},
        {4: F(2645350155, 436783036), 5: F(-869117760, 109195759), 6: F(831120885, 436783036)},
        {
            1: F(31279815, 7530742),
            2: F(3666455415, 218391518),
            3: F(3572264955, 109195759),
            4: F(8717751945, 218391518),
            5: F(3525702999, 109195759),
            6: F(1634628387, 109195759),
        },
    ),
    RowStencil(
        "standard-6",
        {5: F(1), 9: F(1)},
        {5: F(132838307280, 61865369749), 6: F(-183300929280, 61865369749), 7: F(50462622000, 61865369749)},
        {
            1: F(82375685280, 61865369749),
            2: F(402603647040, 61865369749),
            3: F(946588828080, 61865369749),
            4: F(1390554453120, 61865369749),
            5: F(1350858565644, 61865369749),
            6: F(749461929944, 61865369749),
        },
    ),
)

_IMPROVED_ROWS = (
    RowStencil(
        "improved-1",
        {0: F(1), 1: F(-24407, 109), 2: F(-59362, 109), 3: F(-10662, 109), 4: F(-907, 109), 5: F(1)},
        {
            0: F(66633336, 545),
            1: F(-19958400, 109),
            2: F(9979200, 109),
            3: F(-4435200, 109),
            4: F(1247400, 109),
            5: F(-798336, 545),
        },
        # y_0^(7) ODE'den gelir: g(a) - f(a) u0
        {1: F(9114336, 109), 2: F(1995840, 109), 7: F(-80, 109)},
    ),
    RowStencil(
        "improved-2",
        {
            1: F(1),
            2: F(202055040421, 554613069),
            3: F(77878525838, 184871023),
            4: F(18661788874, 184871023),
            5: F(-2434662535, 554613069),
            6: F(1),
        },
        {
            1: F(-4011644165760, 184871023),
            2: F(8861887188000, 184871023),
            3: F(-73815832428800, 1663839207),
            4: F(4618760731200, 184871023),
            5: F(-1470208924800, 184871023),
            6: F(1826678971040, 1663839207),
        },
        {1: F(-4345911046400, 554613069), 2: F(-1035868310400, 184871023), 3: F(-183470425600, 184871023)},
    ),
    RowStencil(
        "improved-3",
        {
            2: F(1),
            3: F(-13173366154319505819, 604803696004634),
            4: F(-5923535526089565973, 302401848002317),
            5: F(-2639790737228529743, 604803696004634),
            7: F(1),
        },
        {
            2: F(25352931909798309915, 43200264000331),
            3: F(-198185856313975120000, 129600792000993),
            4: F(72535593878062755750, 43200264000331),
            5: F(-44672825515677652800, 43200264000331),
            6: F(44958164899589796925, 129600792000993),
            7: F(-2139803134054971840, 43200264000331),
        },
        {
            1: F(5764036699720950200, 43200264000331),
            2: F(7374675959642702700, 43200264000331),
            3: F(3273172503578299200, 43200264000331),
            4: F(521467194925746900, 43200264000331),
        },
    ),
    RowStencil(
        "improved-4",
        {
            3: F(1),
            4: F(-3169885805313999875741, 17618985121607404312),
            6: F(-544760103861334609083, 17618985121607404312),
            7: F(1),
        },
        {
            3: F(5366584014500607349360, 19821358261808329851),
            4: F(-1627194491533397967735555, 1127615047782873875968),
            5: F(5581229831865256388400, 2202373140200925539),
            6: F(-324347788172453021646845, 158570866094466638808),
            7: F(1793040053953186573920, 2202373140200925539),
            8: F(-147257531382013448691645, 1127615047782873875968),
        },
        {
            1: F(-78317811652764229087465, 845711285837155406976),
            2: F(-42412130734120984954425, 140951880972859234496),
            3: F(-13509365844145615609375, 35237970243214808624),
            4: F(-7826257773953806554675, 35237970243214808624),
            5: F(-447768854035545682017, 8809492560803702156),
        },
    ),
    RowStencil(
        "improved-5",
        {4: F(1), 7: F(-6169811365491003355386625, 364845537886699795641421), 9: F(1)},
        {
            4: F(413182203198678792199193360481, 373601830795980590736815104),
            5: F(-1011762526223941981900336800, 364845537886699795641421),
            6: F(998387082478934194463004566965, 354629862825872201363461212),
            7: F(-566429213407879867786917120, 364845537886699795641421),
            8: F(173230355267937275186019127455, 373601830795980590736815104),
            9: F(-5254626822196644195075230752, 88657465706468050340865303),
        },
        {
            1: F(1828802733123508354716945025585, 7565437073618606962420505856),
            2: F(54937023892836663800655898465, 74170951702143205513926528),
            3: F(319183920456421230207708911935, 315226544734108623434187744),
            4: F(81879551659139637198985554365, 105075514911369541144729248),
            5: F(2991554077139003376141526763, 8756292909280795095394104),
            6: F(303485670688565607390252013, 4378146454640397547697052),
        },
    ),
    RowStencil(
        "improved-6",
        {5: F(1), 10: F(1)},
        {
            5: F(19038680213948167651954555270266, 43087137994818537402205515625),
            6: F(-3612553213748861716357961962885, 2680364680381671574716400716),
            7: F(4872382360659412438888663650, 2757576831668386393741153),
            8: F(-3637650046079073899112436800, 2757576831668386393741153),
            9: F(396380487483749310137552942650, 670091170095417893679100179),
            10: F(-25866940054548307411938055846689, 172348551979274149608822062500),
        },
        {
            1: F(38692597856846972600037888063421, 698011635516060305915729353125),
            2: F(9138473244848295227157642242648, 46534109034404020394381956875),
            3: F(2879180812841847947352594547754, 9306821806880804078876391375),
            4: F(1170428496335992779989052992, 4278998531899220266150065),
            5: F(2186365487813281315497916274, 15909097105779152271583575),
            6: F(1319003601532979667100927096, 41363652475025795906117295),
        },
    ),
)


def published_rows(mode: Mode) -> Tuple[RowStencil, ...]:
    """Basılı katsayılar, hiçbir düzeltme yapılmadan"""
    mode = EndConditionMode(mode)
    return _STANDARD_ROWS if mode == EndConditionMode.STANDARD else _IMPROVED_ROWS


# ============================================
# MOMENT KONTROLÜ
# ============================================

def _lhs_moment(row: RowStencil, degree: int) -> Fraction:
    """y = t^d, h = 1 için Σ u_j (t^d)^(7) (j)"""
    if degree < SEVENTH:
        return F(0)
    falling = math.perm(degree, SEVENTH)
    return sum((u * falling * j ** (degree - SEVENTH) for j, u in row.u_coeffs.items()), F(0))


def _rhs_moment(row: RowStencil, degree: int) -> Fraction:
    total = sum((c * j ** degree for j, c in row.y_coeffs.items()), F(0))
    if degree in row.deriv_coeffs:
        total += row.deriv_coeffs[degree] * math.factorial(degree)
    return total


def moment_defects(row: RowStencil, degree: int) -> List[Fraction]:
    """t^0..t^degree için LHS - RHS (h = 1, a = 0); tam satırda hepsi sıfır"""
    return [_lhs_moment(row, d) - _rhs_moment(row, d) for d in range(degree + 1)]


def exactness_degree(row: RowStencil, limit: int = 16) -> int:
    """Satırın tam olduğu en yüksek polinom derecesi (-1: sabitte bile değil)"""
    for d in range(limit + 1):
        if _lhs_moment(row, d) != _rhs_moment(row, d):
            return d - 1
    return limit


# ============================================
# BELİRSİZ KATSAYILAR
# ============================================

def _solve_support(row: RowStencil, degree: int, y_knots: List[int], orders: List[int]):
    """Verilen destek üzerinde sağ tarafı sympy ile kesin çöz; tutarsızsa None"""
    import sympy

    rows, rhs = [], []
    for d in range(degree + 1):
        line = [sympy.Integer(j) ** d for j in y_knots]
        line += [sympy.factorial(d) if k == d else sympy.Integer(0) for k in orders]
        rows.append(line)
        moment = _lhs_moment(row, d)
        rhs.append(sympy.Rational(moment.numerator, moment.denominator))

    matrix = sympy.Matrix(rows)
    vector = sympy.Matrix(rhs)
    try:
        solution, free = matrix.gauss_jordan_solve(vector)
    except ValueError:
        return None
    if free.shape[0]:
        solution = solution.subs({symbol: 0 for symbol in free})

    values = [F(int(sympy.fraction(v)[0]), int(sympy.fraction(v)[1])) for v in solution]
    y_coeffs = {j: values[i] for i, j in enumerate(y_knots)}
    deriv_coeffs = {k: values[len(y_knots) + i] for i, k in enumerate(orders)}
    return y_coeffs, deriv_coeffs


def derive_rhs(row: RowStencil, degree: int) -> RowStencil:
    """
    Sol taraf (u katsayıları) sabit tutularak sağ taraf t^0..t^degree'ye tam olacak şekilde yeniden türetilir.
    Önce yayımlanan destek denenir, tutarsızsa eksik türev mertebeleri (≤ 7) sırayla eklenir.
    """
    y_knots = sorted(row.y_coeffs)
    orders = sorted(row.deriv_coeffs)
    candidates = [k for k in range(1, MAX_DERIVATIVE_ORDER + 1) if k not in orders]

    while True:
        solved = _solve_support(row, degree, y_knots, orders)
        if solved is not None:
            y_coeffs, deriv_coeffs = solved
            return replace(row, label=f"{row.label} (türetilmiş)", y_coeffs=y_coeffs, deriv_coeffs=deriv_coeffs)
        if not candidates:
            raise EndConditionError(f"{row.label}: {degree}. dereceye kadar tam sağ taraf bulunamadı")
        orders = sorted(orders + [candidates.pop(0)])
        logger.debug(f"{row.label}: destek genişletildi, türev mertebeleri {orders}")


@lru_cache(maxsize=None)
def _resolved(mode: EndConditionMode) -> Tuple[RowStencil, ...]:
    degree = exact_degree(mode)
    resolved = []
    for row in published_rows(mode):
        reached = exactness_degree(row, degree)
        if reached < degree:
            logger.warning(
                f"⚠️ {row.label}: yayımlanan katsayılar yalnızca {reached}. dereceye kadar tam; "
                f"sağ taraf {degree}. dereceye göre yeniden türetiliyor"
            )
            row = derive_rhs(row, degree)
        resolved.append(row)
    logger.info(f"✅ {mode.value} uç koşulları hazır")
    return tuple(resolved)


def resolved_rows(mode: Mode) -> Tuple[RowStencil, ...]:
    """Montajda kullanılan satırlar: tam olanlar olduğu gibi, kusurlular düzeltilmiş"""
    return _resolved(EndConditionMode(mode))
