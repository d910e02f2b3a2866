"""Module entry point for ``python -m fibecc``."""

from .cli import app


if __name__ == "__main__":
    app(prog_name="fibecc")
