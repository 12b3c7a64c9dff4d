"""
Tool Registry - Alt Komutların Merkezi Yönetimi
"""
import logging
from typing import Dict, List, Tuple

from core.exceptions import KaskadError
from tools.cascade_tool import run_cascade
from tools.coeffs_tool import run_coeffs
from tools.converge_tool import run_converge
from tools.solve_tool import run_solve

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_NUMERICAL = 2

_CONFIG_PARAMETERS = {
    "type": "object",
    "properties": {
        "config": {"type": "string", "description": "JSON yapılandırma yolu veya data/configs altındaki ad"}
    },
    "required": ["config"],
}


class ToolRegistry:
    """Alt komutları kaydeder ve çalıştırır"""

    def __init__(self):
        self._tools: Dict[str, Dict] = {}
        self._register_all_tools()
        logger.debug(f"🔧 {len(self._tools)} alt komut kaydedildi")

    def _register_all_tools(self):
        # 1. TEK ÇÖZÜM
        self._tools["solve"] = {
            "name": "solve",
            "description": "7. mertebe BDP'yi spline yöntemiyle çözer, knot değerlerini CSV'ye yazar",
            "function": run_solve,
            "parameters": _CONFIG_PARAMETERS,
        }

        # 2. KASKAD
        self._tools["cascade"] = {
            "name": "cascade",
            "description": "Kaskad modelini indirger, çözer ve derlenen g(t)'yi yazar",
            "function": run_cascade,
            "parameters": _CONFIG_PARAMETERS,
        }

        # 3. YAKINSAMA
        self._tools["converge"] = {
            "name": "converge",
            "description": "n listesi için hata ve gözlenen mertebe tablosu üretir",
            "function": run_converge,
            "parameters": _CONFIG_PARAMETERS,
        }

        # 4. KATSAYILAR
        self._tools["coeffs"] = {
            "name": "coeffs",
            "description": "(α, β, γ, δ) ve c7..c12 kesme katsayılarını yazdırır",
            "function": run_coeffs,
            "parameters": {
                "type": "object",
                "properties": {
                    "delta": {"type": "string", "description": "Optimal aile için δ (örn. 51/2)"},
                    "theta": {"type": "string", "description": "Trigonometrik kapalı formlar için θ"},
                    "params": {"type": "string", "description": "Dört parametre: a,b,c,d"},
                },
                "oneOf": [["delta", "theta", "params"]],
            },
        }

    def execute_tool(self, name: str, arguments: Dict) -> Tuple[int, str]:
        """Aracı çalıştırır; (çıkış kodu, mesaj) döner"""
        tool = self._tools.get(name)
        if not tool:
            logger.error(f"Bilinmeyen alt komut: {name}")
            return EXIT_CONFIG, f"❌ '{name}' adlı alt komut yok. Mevcut: {', '.join(self._tools)}"

        try:
            result = tool["function"](**arguments)
            logger.info(f"✅ Alt komut başarılı: {name}")
            return EXIT_OK, str(result)

        except KaskadError as e:
            logger.error(f"{type(e).__name__} ({name}): {e}")
            return e.exit_code, f"❌ {e}"

        except TypeError as e:
            logger.error(f"Parametre hatası ({name}): {e}")
            return EXIT_CONFIG, f"❌ {name} alt komutuna yanlış parametreler gönderildi."

        except Exception as e:
            logger.error(f"Alt komut hatası ({name}): {e}", exc_info=True)
            return EXIT_NUMERICAL, f"❌ {name} çalıştırılırken hata oluştu: {e}"

    def get_tools_schema(self) -> List[Dict]:
        """argparse için şema"""
        return [
            {"name": data["name"], "description": data["description"], "parameters": data["parameters"]}
            for data in self._tools.values()
        ]

    def list_tools(self) -> List[str]:
        return list(self._tools.keys())


# Global instance
registry = ToolRegistry()
