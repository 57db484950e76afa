#!/usr/bin/env python3
"""Точка входа для CLI.

Использование:
    python app.py solve --algo fast path/to/game.txt
    python app.py mec --algo fast path/to/game.txt
    python app.py dynamic --mode decremental path/to/game.txt path/to/trace.txt
    python app.py gen --n 100 --m 400 --seed 1 --out game.txt
    python app.py bench --suite dense --out report.csv
"""

from buchi_games.cli import main

if __name__ == "__main__":
    raise SystemExit(main())
