#!/usr/bin/env python3
"""
qindex-verify - Main Application Entry Point

Verification toolkit for signless Laplacian (Q-index) spectral extremal graph theory.

Usage:
    qindex-verify family "K1v(kP2+P1)" --k 2 --q
    qindex-verify verify polynomials --k-min 3 --k-max 40 --out certificates.json
    qindex-verify search 6 --filter two-leaves-free
    qindex-verify config show
"""

import sys
from pathlib import Path
from typing import List, Optional, Tuple

# Add the project root to Python path for imports
project_root = Path(__file__).parent.absolute()
if str(project_root) not in sys.path:
    sys.path.insert(0, str(project_root))

EXIT_USAGE = 2


def check_dependencies() -> Tuple[bool, List[str], List[str]]:
    """
    Check if all required dependencies are available.

    Returns:
        tuple: (success: bool, missing_packages: list, missing_optional: list)
    """
    required_packages = [
        ('numpy', 'numpy'),
        ('scipy', 'scipy'),
        ('sympy', 'sympy'),
        ('networkx', 'networkx'),
        ('jsonschema', 'jsonschema'),
        ('psutil', 'psutil'),
        ('tqdm', 'tqdm'),
    ]

    # parallel test runs only
    optional_packages = [
        ('xdist', 'pytest-xdist'),
    ]

    missing = []
    for package, install_name in required_packages:
        try:
            __import__(package)
        except ImportError:
            missing.append(install_name)

    missing_optional = []
    for package, install_name in optional_packages:
        try:
            __import__(package)
        except ImportError:
            missing_optional.append(install_name)

    return len(missing) == 0, missing, missing_optional


def show_dependency_error(missing_packages: List[str], missing_optional: List[str]) -> None:
    """Print the missing packages and the install hint on stderr."""
    message = "Missing required dependencies:\n"
    message += "\n".join(f"  • {package}" for package in missing_packages)
    if missing_optional:
        message += "\n\nMissing optional dependencies:\n"
        message += "\n".join(f"  • {package}" for package in missing_optional)
    message += "\n\nInstall them with:\n  pip install -r requirements.txt\n"
    sys.stderr.write(message)


def main(argv: Optional[List[str]] = None) -> int:
    """
    Main application entry point.

    Handles dependency checking, then hands the arguments to the command-line interface.
    """
    success, missing, missing_optional = check_dependencies()
    if not success:
        show_dependency_error(missing, missing_optional)
        return EXIT_USAGE

    from cli.interface import run_cli

    return run_cli(argv)


if __name__ == "__main__":
    sys.exit(main())
