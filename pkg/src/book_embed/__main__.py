"""python -m book_embed"""

from .cli.main import main

main()
