"""
Developer commands, run through ``./run.sh <command> [args]``

    ./run.sh tests -k connectivity
    ./run.sh format
    ./run.sh lint
    ./run.sh sweep --n-list 10,20 --samples 3
    ./run.sh docs fresh view
"""
import os
import platform
import shlex
import shutil
import subprocess
import sys
from pathlib import Path

here = Path(__file__).parent
root = here.parent

if platform.system() == "Windows":
    import mslex

    shlex = mslex  # noqa

commands = {}


def command(func):
    """Register ``func(bin_dir, args)`` as a command under its own name"""
    commands[func.__name__] = func
    return func


def run(*args, _env=None):
    print(f"Running '{' '.join(shlex.quote(str(part)) for part in args)}'")
    env = {**os.environ, **(_env or {})}
    if subprocess.run([str(part) for part in args], env=env).returncode != 0:
        sys.exit(1)


@command
def format(bin_dir, args):
    args = args or ["."]
    run(bin_dir / "black", *args)
    run(bin_dir / "isort", *args)


@command
def lint(bin_dir, args):
    run(bin_dir / "pylama", *args)


@command
def tests(bin_dir, args):
    if "-q" not in args:
        args = ["-q", *args]
    env = {"NOSE_OF_YETI_BLACK_COMPAT": "false"}
    if "RAINBOWPATH_HYPOTHESIS" not in os.environ:
        env["RAINBOWPATH_HYPOTHESIS"] = "ci" if os.environ.get("CI_SERVER") else "dev"
    run(bin_dir / "pytest", *args, _env=env)


@command
def tox(bin_dir, args):
    run(bin_dir / "tox", *args)


@command
def cli(bin_dir, args):
    run(bin_dir / "rainbowpath", *args)


@command
def sweep(bin_dir, args):
    if not args:
        args = ["--n-list", "10,20,30", "--samples", "10", "--output-dir", "experiment"]
    run(bin_dir / "rainbowpath", "experiment", *args)


@command
def docs(bin_dir, args):
    docs_path = root / "docs"
    build_path = docs_path / "_build"
    builder = [bin_dir / "sphinx-build"]

    other_args = []
    for arg in args:
        if arg == "fresh":
            shutil.rmtree(build_path, ignore_errors=True)
        elif arg == "view":
            builder = [bin_dir / "sphinx-autobuild", "--port", "9876"]
        else:
            other_args.append(arg)

    os.chdir(docs_path)
    run(*builder, ".", "_build/html", "-b", "html", "-d", "_build/doctrees", *other_args)


def app(args):
    if not args or args[0] not in commands:
        sys.exit(f"Unknown command:\nAvailable: {sorted(commands)}\nWanted: {args}")

    os.chdir(root)
    commands[args[0]](Path(sys.executable).parent, args[1:])


if __name__ == "__main__":
    app(sys.argv[1:])
