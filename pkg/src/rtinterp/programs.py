"""The three benchmark programs shipped with the package."""

from importlib.resources import files

from .asm import Program, load_program

NAMES = ("square", "fibo", "factorial")


def source(name: str) -> str:
    if name not in NAMES:
        raise KeyError(name)
    return (files(__package__) / "asm" / f"{name}.asm").read_text(encoding="utf-8")


def get(name: str) -> Program:
    return load_program(source(name), name)
