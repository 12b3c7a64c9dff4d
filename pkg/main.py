"""
KASKAD-7 - Komut satırı girişi
python main.py solve --config example1_improved_n20
python main.py coeffs --delta 51/2
"""
import argparse
import logging
import os
import re
import sys
from typing import List, Optional

from colorama import Fore, Style, init as colorama_init
from dotenv import load_dotenv

from core.exceptions import ConfigError
from tools.registry import EXIT_CONFIG, EXIT_OK, registry

LOG_FORMAT = "%(asctime)s - %(levelname)s - %(name)s - %(message)s"
NEGATIVE_VALUE = re.compile(r"^-[\d.]")


def setup_logging(level: Optional[str] = None):
    """Log dosyası + stderr'e yalnızca hatalar"""
    level = (level or os.getenv("KASKAD_LOG_LEVEL", "INFO")).upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.INFO),
        format=LOG_FORMAT,
        filename=os.getenv("KASKAD_LOG_FILE", "kaskad.log"),
        filemode="a",
        force=True,
    )
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(logging.ERROR)
    console_handler.setFormatter(logging.Formatter(LOG_FORMAT))
    logging.getLogger().addHandler(console_handler)


class KaskadArgumentParser(argparse.ArgumentParser):
    """Kullanım hataları da yapılandırma hatasıdır: çıkış kodu 1"""

    def error(self, message: str):
        raise ConfigError(f"{self.prog}: {message}")


def attach_negative_values(argv: List[str]) -> List[str]:
    """`--params -29/15,...` → `--params=-29/15,...`; argparse eksi ile başlayan değeri seçenek sanar"""
    joined: List[str] = []
    for token in argv:
        if joined and joined[-1].startswith("--") and "=" not in joined[-1] and NEGATIVE_VALUE.match(token):
            joined[-1] = f"{joined[-1]}={token}"
        else:
            joined.append(token)
    return joined


def build_parser() -> argparse.ArgumentParser:
    """Alt komutlar registry şemasından kurulur"""
    parser = KaskadArgumentParser(
        prog="kaskad7",
        description="Spline yöntemleriyle 7. mertebe başlangıç değer problemleri ve kaskad modelleri",
    )
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING, ERROR")
    subparsers = parser.add_subparsers(dest="command", required=True)

    for schema in registry.get_tools_schema():
        sub = subparsers.add_parser(schema["name"], help=schema["description"])
        parameters = schema["parameters"]
        exclusive = {name for group in parameters.get("oneOf", []) for name in group}
        required = set(parameters.get("required", []))

        for group in parameters.get("oneOf", []):
            mutex = sub.add_mutually_exclusive_group(required=True)
            for name in group:
                mutex.add_argument(f"--{name}", help=parameters["properties"][name]["description"])
        for name, spec in parameters["properties"].items():
            if name in exclusive:
                continue
            sub.add_argument(f"--{name}", required=name in required, help=spec["description"])
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    load_dotenv()
    colorama_init()
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(attach_negative_values(argv))
    except ConfigError as e:
        print(f"{Fore.RED}❌ {e}{Style.RESET_ALL}", file=sys.stderr)
        return EXIT_CONFIG
    setup_logging(args.log_level)
    logger = logging.getLogger(__name__)

    arguments = {key: value for key, value in vars(args).items() if key not in ("command", "log_level")}
    arguments = {key: value for key, value in arguments.items() if value is not None}
    logger.info(f"🚀 {args.command} başlatılıyor: {arguments}")

    code, message = registry.execute_tool(args.command, arguments)
    color = Fore.GREEN if code == EXIT_OK else Fore.RED
    stream = sys.stdout if code == EXIT_OK else sys.stderr
    print(f"{color}{message}{Style.RESET_ALL}", file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
