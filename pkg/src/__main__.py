# PERMITE EJECUTAR LA CLI COMO python -m src
from src.ui.cli import main

main()
