# main.py
"""
Hauptprogramm für FreeGroupLab
Leitet die Kommandozeile an cli.run weiter, Exit-Code siehe README
"""
import sys

from config import settings


def main() -> int:
    if sys.version_info[:2] < settings.REQUIRED_PYTHON_VERSION:
        required = ".".join(str(part) for part in settings.REQUIRED_PYTHON_VERSION)
        print(f"❌ Python {required}+ erforderlich, gefunden: {sys.version.split()[0]}", file=sys.stderr)
        return 2

    # Import erst nach der Versionsprüfung
    from cli import run
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
