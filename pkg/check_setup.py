# check_setup.py
import sys
import os

from dotenv import load_dotenv

BELL = [1, 2, 5, 15, 52, 203]


def check_environment():
    print("🔍 Starting the sanity check...\n")
    all_good = True

    # 1. Python version
    version = sys.version_info
    if version.major == 3 and version.minor >= 10:
        print(f"✅ Python Version: {version.major}.{version.minor}")
    else:
        print(f"❌ Python Version: {version.major}.{version.minor} (3.10 or newer required)")
        all_good = False

    # 2. .env and settings
    if os.path.exists(".env"):
        print("✅ .env file found.")
        load_dotenv()
    else:
        print("ℹ️  No .env file (defaults apply; copy .env.example to override).")

    from src.tools.exceptions import ConfigError
    from src.utils.config import load_settings
    try:
        settings = load_settings(use_dotenv=False)
        print(f"✅ Settings: depth={settings.max_depth}, gap norm={settings.max_gap_norm}, "
              f"oracle limit={settings.oracle_limit}")
    except ConfigError as e:
        print(f"❌ {e.message}")
        return False

    # 3. Logs directory
    log_dir = os.path.dirname(settings.log_file) or "."
    if not os.path.exists(log_dir):
        os.makedirs(log_dir)
        print(f"✅ {log_dir}/ created.")

    # 4. Smoke test: 23-1 avoiders are counted by the Bell numbers
    from src.graph import discover
    from src.tools import SchemeEvaluator, parse_pattern_set
    scheme = discover(parse_pattern_set("23-1"))
    values = SchemeEvaluator(scheme).sequence(len(BELL)).values
    if values == BELL:
        print(f"✅ Smoke test: {values}")
    else:
        print(f"❌ Smoke test: expected {BELL}, got {values}")
        all_good = False

    if all_good:
        print("\n🚀 ALL SET! You can start.")
    else:
        print("\n⚠️ FIX THE ERRORS ABOVE BEFORE CONTINUING.")
    return all_good


if __name__ == "__main__":
    sys.exit(0 if check_environment() else 1)
