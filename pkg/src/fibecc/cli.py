"""Command-line interface for fibecc key generation, encryption and analysis."""

from __future__ import annotations

import random
import secrets
from contextlib import contextmanager
from importlib.metadata import PackageNotFoundError, version
from pathlib import Path
from typing import Iterator, Optional

import typer

from .codec import (
    DEFAULT_CHARSET,
    PADDING_SYMBOL,
    PUBLISHED_BASE_POINT,
    PUBLISHED_CURVE,
    AlphabetMap,
    derive_alphabet,
    published_alphabet,
)
from .config import FibeccConfig, load_config
from .curve import (
    CurveParams,
    format_point,
    group_order,
    hasse_interval,
    parse_point,
    point_orders,
    validate_curve,
)
from .errors import FibeccError, RangeError, SizeMismatch
from .field import find_primitive_element, primes_between
from .keyfiles import (
    dump_alphabet,
    dump_ciphertext,
    dump_private_key,
    dump_public_key,
    load_alphabet,
    load_ciphertext,
    load_private_key,
    load_public_key,
)
from .keyspace import PUBLISHED_DIMENSIONS, PUBLISHED_PRIMES, build_tables, render_table
from .scheme import (
    DecryptionTranscript,
    EncryptionTranscript,
    PublicKey,
    SchemeParams,
    ciphertext_text,
    decrypt_with_transcript,
    encrypt_with_transcript,
    gen_keypair,
    is_trivial_mask,
)

app = typer.Typer(
    add_completion=False,
    help="fibecc: elliptic-curve ElGamal with multinacci key matrices.",
)

DEMO_BETA = 31
DEMO_R = 14
DEMO_E = 21
DEMO_MESSAGE = "COVID-19"


def _fibecc_version() -> str:
    """Return the installed package version or a local fallback version."""
    try:
        return version("fibecc")
    except PackageNotFoundError:
        return "0.0.0"


def _version_callback(value: bool) -> None:
    """Print the fibecc version and exit when ``--version`` is requested."""
    if value:
        typer.echo(f"fibecc {_fibecc_version()}")
        raise typer.Exit()


@app.callback()
def main(
    version_flag: bool = typer.Option(
        False,
        "--version",
        callback=_version_callback,
        is_eager=True,
        help="Show fibecc version and exit.",
    ),
) -> None:
    """Define global CLI options shared by all subcommands."""
    del version_flag


def project_root() -> Path:
    """Return the nearest ancestor directory that looks like a project root."""
    cwd = Path.cwd().resolve()

    for candidate in (cwd, *cwd.parents):
        if (candidate / "pyproject.toml").exists() or (candidate / ".git").exists():
            return candidate

    return cwd


def _config() -> FibeccConfig:
    return load_config(project_root())


@contextmanager
def _reporting_errors() -> Iterator[None]:
    """Turn library errors into an ``Error:`` line and exit code 1."""
    try:
        yield
    except FibeccError as exc:
        typer.echo(f"Error: {exc}", err=True)
        raise typer.Exit(code=1) from None


def _read_text(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        typer.echo(f"Error: cannot read {path}: {exc}", err=True)
        raise typer.Exit(code=2) from None


def _write_text(path: Path, text: str) -> None:
    try:
        path.write_text(text, encoding="utf-8")
    except OSError as exc:
        typer.echo(f"Error: cannot write {path}: {exc}", err=True)
        raise typer.Exit(code=2) from None


def _rng(seed: Optional[int]) -> random.Random:
    """Return a seeded generator for reproducible runs, else the system CSPRNG."""
    if seed is None:
        return secrets.SystemRandom()
    return random.Random(seed)


def _random_exponent(rng: random.Random, p: int, name: str) -> int:
    if p - 1 <= 2:
        raise RangeError(f"no {name} satisfies 1 < {name} < {p - 1} for p={p}")
    return rng.randrange(2, p - 1)


def _resolve_alphabet(
    curve: CurveParams, alphabet_path: Optional[Path], limit: int
) -> AlphabetMap:
    """Use the alphabet file, else the published table, else a derived alphabet."""
    if alphabet_path is not None:
        return load_alphabet(_read_text(alphabet_path), curve, limit)
    if curve == validate_curve(*PUBLISHED_CURVE):
        return published_alphabet()
    order = group_order(curve, limit)
    if order > len(DEFAULT_CHARSET):
        raise SizeMismatch(
            f"the curve has {order} points but only {len(DEFAULT_CHARSET)} default "
            "symbols; pass --alphabet"
        )
    return derive_alphabet(curve, DEFAULT_CHARSET[: order - 1] + PADDING_SYMBOL, limit)


def _echo_encryption(pub: PublicKey, transcript: EncryptionTranscript) -> None:
    typer.echo(f"e={transcript.ephemeral.e}")
    typer.echo(f"a={transcript.a_value}")
    typer.echo(f"k={transcript.secret.k}")
    typer.echo(f"N={pub.params.order}")
    typer.echo(f"K={transcript.key}")
    typer.echo(f"kE={format_point(transcript.mask)}")
    for index, (plain, cipher) in enumerate(
        zip(transcript.plain_blocks, transcript.cipher_blocks), start=1
    ):
        typer.echo(f"P{index}={plain}")
        typer.echo(f"C{index}={cipher}")


def _echo_decryption(transcript: DecryptionTranscript) -> None:
    typer.echo(f"k={transcript.secret.k}")
    typer.echo(f"D={transcript.decryption_key}")
    typer.echo(f"-kE={format_point(transcript.negated_mask)}")
    for index, plain in enumerate(transcript.plain_blocks, start=1):
        typer.echo(f"P{index}={plain}")


def _warn_if_base_point_is_not_a_generator(params: SchemeParams, limit: int) -> None:
    """Warn when some curve points have orders that need not divide ``N``."""
    if params.p > limit:
        typer.echo(
            f"Warning: p={params.p} exceeds the enumeration limit {limit}; "
            "skipping the subgroup check."
        )
        return
    count = group_order(params.curve, limit)
    if count != params.order:
        typer.echo(
            f"Warning: E has order {params.order} but the curve has {count} points; "
            "blocks holding points outside the subgroup generated by E may not decrypt."
        )


@app.command()
def keygen(
    p: int = typer.Option(PUBLISHED_CURVE[0], "--p", help="Field prime."),
    a: int = typer.Option(PUBLISHED_CURVE[1], "--a", help="Curve coefficient a."),
    b: int = typer.Option(PUBLISHED_CURVE[2], "--b", help="Curve coefficient b."),
    base_point: str = typer.Option(
        format_point(PUBLISHED_BASE_POINT), "--E", help="Base point as x,y or (x,y)."
    ),
    n: Optional[int] = typer.Option(None, "--n", help="Block dimension."),
    beta: Optional[int] = typer.Option(
        None, "--beta", help="Primitive element (default: the smallest one)."
    ),
    r: Optional[int] = typer.Option(
        None, "--r", help="Private exponent (default: random)."
    ),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed for --r."),
    public: Path = typer.Option(Path("fibecc.pub"), "--public"),
    private: Path = typer.Option(Path("fibecc.key"), "--private"),
) -> None:
    """Generate a key pair and write the public and private key files."""
    cfg = _config()
    with _reporting_errors():
        curve = validate_curve(p, a, b)
        params = SchemeParams.from_curve(curve, parse_point(base_point))
        if beta is None:
            beta = find_primitive_element(curve.modulus).value
        if r is None:
            r = _random_exponent(_rng(seed), p, "r")
        pub, priv = gen_keypair(params, beta, r, cfg.dimension if n is None else n)

    _warn_if_base_point_is_not_a_generator(params, cfg.enumeration_limit)
    _write_text(public, dump_public_key(pub))
    _write_text(private, dump_private_key(priv))
    typer.echo(f"E1={pub.e1}")
    typer.echo(f"Wrote public key to {public}")
    typer.echo(f"Wrote private key to {private}")


@app.command()
def encrypt(
    message: str = typer.Option(..., "--message", "-m", help="Text to encrypt."),
    public: Path = typer.Option(Path("fibecc.pub"), "--public"),
    e: Optional[int] = typer.Option(
        None, "--e", help="Ephemeral exponent (default: random)."
    ),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed for --e."),
    out: Path = typer.Option(Path("fibecc.ct"), "--out", help="Ciphertext file."),
    alphabet: Optional[Path] = typer.Option(None, "--alphabet"),
    verbose: bool = typer.Option(
        False, "--verbose", "-v", help="Print every intermediate value."
    ),
) -> None:
    """Encrypt a message with a public key file."""
    cfg = _config()
    with _reporting_errors():
        pub = load_public_key(_read_text(public))
        params = pub.params
        symbols = _resolve_alphabet(params.curve, alphabet, cfg.enumeration_limit)
        if e is None:
            e = _random_exponent(_rng(seed), params.p, "e")
        bundle, transcript = encrypt_with_transcript(pub, e, message, symbols)
        cipher = ciphertext_text(bundle, symbols)

    if is_trivial_mask(params, transcript.secret):
        typer.echo("Warning: kE is the point at infinity; the affine mask is trivial.")
    if verbose:
        _echo_encryption(pub, transcript)
    _write_text(out, dump_ciphertext(bundle))
    typer.echo(f"a={bundle.a_value}")
    typer.echo(f"Ciphertext: {cipher}")
    typer.echo(f"Wrote ciphertext to {out}")


@app.command()
def decrypt(
    private: Path = typer.Option(Path("fibecc.key"), "--private"),
    public: Path = typer.Option(Path("fibecc.pub"), "--public"),
    ciphertext: Path = typer.Option(Path("fibecc.ct"), "--ciphertext"),
    alphabet: Optional[Path] = typer.Option(None, "--alphabet"),
    verbose: bool = typer.Option(
        False, "--verbose", "-v", help="Print every intermediate value."
    ),
) -> None:
    """Decrypt a ciphertext file and print the plaintext."""
    cfg = _config()
    with _reporting_errors():
        pub = load_public_key(_read_text(public))
        params = pub.params
        priv = load_private_key(_read_text(private), params.p)
        bundle = load_ciphertext(_read_text(ciphertext), params)
        symbols = _resolve_alphabet(params.curve, alphabet, cfg.enumeration_limit)
        text, transcript = decrypt_with_transcript(priv, params, bundle, symbols)

    if verbose:
        _echo_decryption(transcript)
    typer.echo(text)


@app.command()
def inspect(
    p: int = typer.Option(PUBLISHED_CURVE[0], "--p", help="Field prime."),
    a: int = typer.Option(PUBLISHED_CURVE[1], "--a", help="Curve coefficient a."),
    b: int = typer.Option(PUBLISHED_CURVE[2], "--b", help="Curve coefficient b."),
    limit: Optional[int] = typer.Option(
        None, "--limit", help="Largest p to enumerate (default from config)."
    ),
) -> None:
    """List the points of a curve with their orders."""
    cfg = _config()
    with _reporting_errors():
        curve = validate_curve(p, a, b)
        orders = point_orders(curve, cfg.enumeration_limit if limit is None else limit)

    low, high = hasse_interval(p)
    typer.echo(f"Curve: {curve}")
    typer.echo(f"Points: {len(orders)}")
    typer.echo(f"Hasse interval: [{low}, {high}]")
    typer.echo(f"Anomalous: {'yes' if len(orders) == p else 'no'}")
    for point, order in orders.items():
        typer.echo(f"{format_point(point)} order={order}")


@app.command("alphabet")
def alphabet_command(
    p: Optional[int] = typer.Option(
        None, "--p", help="Field prime (default: the published curve)."
    ),
    a: Optional[int] = typer.Option(
        None, "--a", help="Curve coefficient a (required with --p)."
    ),
    b: Optional[int] = typer.Option(
        None, "--b", help="Curve coefficient b (required with --p)."
    ),
    charset: Optional[str] = typer.Option(
        None, "--charset", help="Symbols in point order; the last maps to O."
    ),
    out: Optional[Path] = typer.Option(None, "--out", help="Write to a file."),
) -> None:
    """Print the character-to-point table for a curve."""
    cfg = _config()
    with _reporting_errors():
        if p is None:
            if a is not None or b is not None:
                raise RangeError("--a and --b need --p")
            curve = validate_curve(*PUBLISHED_CURVE)
        elif a is None or b is None:
            raise RangeError("--p needs both --a and --b")
        else:
            curve = validate_curve(p, a, b)
        if charset is None:
            symbols = _resolve_alphabet(curve, None, cfg.enumeration_limit)
        else:
            symbols = derive_alphabet(curve, charset, cfg.enumeration_limit)

    text = dump_alphabet(symbols)
    if out is None:
        typer.echo(text, nl=False)
        return
    _write_text(out, text)
    typer.echo(f"Wrote {len(symbols)} symbols to {out}")


def _parse_int_list(text: str, name: str) -> list[int]:
    """Parse ``lo..hi`` or a comma-separated list; a ``--primes`` range keeps primes."""
    try:
        if ".." not in text:
            return [int(part) for part in text.split(",") if part.strip()]
        low, high = (int(part) for part in text.split("..", 1))
    except ValueError:
        raise RangeError(f"cannot parse --{name} {text!r}") from None
    if name == "primes":
        return primes_between(low, high)
    return list(range(low, high + 1))


@app.command()
def analyze(
    primes: str = typer.Option(
        f"{PUBLISHED_PRIMES[0]}..{PUBLISHED_PRIMES[-1]}",
        "--primes",
        help="Range lo..hi or comma-separated primes.",
    ),
    dims: str = typer.Option(
        ",".join(str(n) for n in PUBLISHED_DIMENSIONS),
        "--n",
        help="Comma-separated matrix dimensions.",
    ),
    as_csv: bool = typer.Option(False, "--csv", help="Emit CSV rows."),
    exact: bool = typer.Option(False, "--exact", help="Add exact group orders."),
    digits: Optional[int] = typer.Option(
        None, "--digits", help="Significant digits (default from config)."
    ),
    rounding: Optional[str] = typer.Option(
        None,
        "--rounding",
        help="published, nearest or down (default from config).",
    ),
) -> None:
    """Tabulate key-space sizes and brute-force retrieval probabilities."""
    cfg = _config()
    with _reporting_errors():
        reports = build_tables(
            _parse_int_list(primes, "primes"), _parse_int_list(dims, "n")
        )
        table = render_table(
            reports,
            digits=cfg.significant_digits if digits is None else digits,
            rounding=cfg.rounding if rounding is None else rounding.strip().lower(),
            table_format="csv" if as_csv else cfg.table_format,
            exact=exact,
        )
    typer.echo(table, nl=False)


@app.command()
def demo() -> None:
    """Replay the published worked example with every intermediate value."""
    with _reporting_errors():
        curve = validate_curve(*PUBLISHED_CURVE)
        params = SchemeParams.from_curve(curve, PUBLISHED_BASE_POINT)
        pub, priv = gen_keypair(params, DEMO_BETA, DEMO_R)
        symbols = published_alphabet()
        bundle, encryption = encrypt_with_transcript(pub, DEMO_E, DEMO_MESSAGE, symbols)
        text, decryption = decrypt_with_transcript(priv, params, bundle, symbols)

    typer.echo(f"Curve: {curve}")
    typer.echo(f"E={format_point(params.base_point)}")
    typer.echo(f"beta={pub.beta}")
    typer.echo(f"r={priv.r}")
    typer.echo(f"E1={pub.e1}")
    typer.echo(f"Message: {DEMO_MESSAGE}")
    _echo_encryption(pub, encryption)
    typer.echo(f"Ciphertext: {ciphertext_text(bundle, symbols)}")
    _echo_decryption(decryption)
    typer.echo(f"Plaintext: {text}")
