# startup.py
"""
Startup-Skript für FreeGroupLab
Überprüft alle Voraussetzungen und startet dann Selbsttest oder CLI

Aufruf:
    python startup.py              # Checks + Testsuite (pytest -q)
    python startup.py fold ...     # Checks + CLI-Befehl
"""
import importlib
import os
import subprocess
import sys
from importlib import metadata

from packaging import version


# Farbcodes für bessere Lesbarkeit
class Colors:
    GREEN = '\033[92m'
    RED = '\033[91m'
    YELLOW = '\033[93m'
    BLUE = '\033[94m'
    ENDC = '\033[0m'
    BOLD = '\033[1m'


def print_colored(text, color):
    print(f"{color}{text}{Colors.ENDC}")


def print_header(text):
    print_colored(f"\n{Colors.BOLD}=== {text} ==={Colors.ENDC}", Colors.BLUE)


def check_file_structure():
    """Überprüft, ob alle erforderlichen Dateien vorhanden sind"""
    print_header("Überprüfe Dateistruktur")

    required_files = [
        'main.py',
        'config/__init__.py',
        'config/settings.py',
        'freegroups/__init__.py',
        'freegroups/errors.py',
        'freegroups/words.py',
        'freegroups/union_find.py',
        'freegroups/stallings.py',
        'freegroups/lattice.py',
        'freegroups/whitehead.py',
        'freegroups/algext.py',
        'freegroups/properties.py',
        'freegroups/oracles.py',
        'cli/__init__.py',
        'cli/commands.py',
        'cli/formats.py',
        'cli/explorer.py',
        'utils/__init__.py',
        'utils/logger.py',
        'requirements.txt',
        'pytest.ini',
    ]

    missing_files = []
    for file_path in required_files:
        if os.path.exists(file_path):
            print_colored(f"✓ {file_path}", Colors.GREEN)
        else:
            print_colored(f"✗ {file_path}", Colors.RED)
            missing_files.append(file_path)

    if missing_files:
        print_colored(f"\n⚠️ Es fehlen {len(missing_files)} Dateien!", Colors.RED)
        return False
    print_colored("\n✓ Alle erforderlichen Dateien sind vorhanden!", Colors.GREEN)
    return True


def check_requirements():
    """Überprüft, ob alle Python-Pakete in ausreichender Version installiert sind"""
    print_header("Überprüfe Python-Pakete")

    from config.settings import REQUIRED_PACKAGES

    missing_packages = []
    wrong_version_packages = []

    for package, (import_name, min_version) in REQUIRED_PACKAGES.items():
        try:
            importlib.import_module(import_name)
        except ImportError:
            print_colored(f"✗ {package} nicht installiert", Colors.RED)
            missing_packages.append(package)
            continue

        try:
            installed_version = metadata.version(package)
        except metadata.PackageNotFoundError:
            print_colored(f"✓ {package} (Version konnte nicht ermittelt werden)", Colors.GREEN)
            continue

        if version.parse(installed_version) < version.parse(min_version):
            print_colored(f"⚠ {package} {installed_version} (mindestens {min_version} erforderlich)",
                          Colors.YELLOW)
            wrong_version_packages.append(package)
        else:
            print_colored(f"✓ {package} {installed_version}", Colors.GREEN)

    if missing_packages:
        print_colored(f"\n⚠️ Es fehlen {len(missing_packages)} Pakete!", Colors.RED)
    if wrong_version_packages:
        print_colored(f"⚠️ {len(wrong_version_packages)} Pakete haben die falsche Version!", Colors.YELLOW)
    if missing_packages or wrong_version_packages:
        return False
    print_colored("\n✓ Alle erforderlichen Pakete sind korrekt installiert!", Colors.GREEN)
    return True


def check_system_requirements():
    """Python-Version und Graphviz-Binary (nur für gerenderte DOT-Bilder nötig)"""
    print_header("Überprüfe Systemvoraussetzungen")

    from config.settings import REQUIRED_PYTHON_VERSION

    critical_issues = False
    current = sys.version.split()[0]
    if sys.version_info[:2] < REQUIRED_PYTHON_VERSION:
        required = ".".join(str(part) for part in REQUIRED_PYTHON_VERSION)
        print_colored(f"✗ Python-Version: {current} ({required}+ erforderlich)", Colors.RED)
        critical_issues = True
    else:
        print_colored(f"✓ Python-Version: {current}", Colors.GREEN)

    try:
        result = subprocess.run(['dot', '-V'], capture_output=True, text=True)
        # dot schreibt die Version nach stderr
        print_colored(f"✓ Graphviz gefunden: {result.stderr.strip() or result.stdout.strip()}", Colors.GREEN)
    except FileNotFoundError:
        print_colored("⚠ Graphviz 'dot' nicht gefunden - DOT-Dateien werden trotzdem geschrieben",
                      Colors.YELLOW)

    return not critical_issues


def install_missing_requirements():
    """Installiert fehlende Requirements"""
    print_header("Installiere fehlende Pakete")

    print_colored("Führe 'pip install -r requirements.txt' aus...", Colors.BLUE)
    result = subprocess.run([sys.executable, '-m', 'pip', 'install', '-r', 'requirements.txt'],
                            capture_output=True, text=True)
    if result.returncode == 0:
        print_colored("✓ Pakete erfolgreich installiert!", Colors.GREEN)
        return True
    print_colored(f"✗ Fehler bei der Installation: {result.stderr}", Colors.RED)
    return False


def run_self_test():
    """Startet die Testsuite im Testing-Environment"""
    print_header("Selbsttest")
    env = dict(os.environ, FG_ENV='test')
    result = subprocess.run([sys.executable, '-m', 'pytest', '-q'], env=env)
    if result.returncode == 0:
        print_colored("\n✓ Alle Tests bestanden!", Colors.GREEN)
    else:
        print_colored("\n✗ Tests fehlgeschlagen!", Colors.RED)
    return result.returncode


def main(argv=None):
    """Hauptfunktion für den Startup-Check"""
    argv = sys.argv[1:] if argv is None else argv

    print_colored(f"{Colors.BOLD}FreeGroupLab - Startup Check{Colors.ENDC}", Colors.BLUE)
    print_colored("=" * 50, Colors.BLUE)

    files_ok = check_file_structure()
    requirements_ok = check_requirements()
    system_ok = check_system_requirements()

    print_header("Zusammenfassung")

    if not requirements_ok:
        response = input("\nMöchten Sie die fehlenden Pakete jetzt installieren? (j/n): ")
        if response.lower() == 'j' and install_missing_requirements():
            print_colored("\nPakete wurden installiert. Starte Check neu...", Colors.GREEN)
            return main(argv)

    if not (files_ok and requirements_ok and system_ok):
        print_colored("✗ Einige kritische Überprüfungen sind fehlgeschlagen!", Colors.RED)
        return 2

    print_colored("✓ Alle kritischen Komponenten sind verfügbar!", Colors.GREEN)
    if not argv:
        return run_self_test()

    print_colored("\nStarte Hauptprogramm...\n", Colors.BLUE)
    result = subprocess.run([sys.executable, 'main.py', *argv])
    return result.returncode


if __name__ == "__main__":
    sys.exit(main())
