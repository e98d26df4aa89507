"""Command-line front end.

    umbral compute bernoulli --n 4
    umbral verify --profile quick --format json
    umbral mc --target L --moment 2 --count 1000000 --seed 42
    umbral quad
    umbral all

Exit status is 0 when every item passes, 1 when any fails and 2 on a
configuration error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import asdict, dataclass, field

from . import __version__
from .exact import ExactScalar
from .families import (
    bernoulli_number,
    bernoulli_poly,
    carlitz_hermite,
    chen_k,
    euler_number,
    euler_poly,
    hermite,
    power_sum,
    zeilberger_hermite,
)
from .identities import PROFILES, REGISTRY, IdentityId, verify_all
from .poly import MultiPoly
from .stochastic import SamplerSpec, ks_check, mc_moment, quad_bernoulli_even

DEFAULT_SEED = 42
DEFAULT_COUNT = 10**6
KS_COUNT = 10**5


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    family: str | None = None
    n: int | None = None
    m: int | None = None
    path: str = "oracle"
    ids: list = field(default_factory=list)
    profile: str = "quick"
    order: int | None = None
    jobs: int = 1
    target: str = "L"
    moment: int = 2
    ks: bool = False
    seed: int = DEFAULT_SEED
    count: int = DEFAULT_COUNT
    format: str = "text"
    output: str | None = None


# values ---------------------------------------------------------------------

def _render_value(v):
    if isinstance(v, MultiPoly):
        return str(v)
    return v.to_json()


def _item(id_, status, **detail):
    return {"id": str(id_), "status": status, "detail": detail}


_OTHER_PATH = {"oracle": "umbral", "umbral": "oracle"}


def _compute_item(family: str, n: int | None, m: int | None, path: str) -> dict:
    if n is None:
        raise ConfigError("compute needs --n")
    two_index = family in ("carlitz", "zeilberger", "power_sum")
    if two_index and m is None:
        raise ConfigError(f"{family} needs --m as well")
    if n < 0 or (m is not None and m < 0):
        raise ConfigError("indices must be >= 0")
    label, fn = {
        "bernoulli": (f"B_{n}", lambda p: bernoulli_number(n, p)),
        "euler": (f"E_{n}", lambda p: euler_number(n, p)),
        "bernoulli_poly": (f"B_{n}(x)", lambda p: bernoulli_poly(n, p)),
        "euler_poly": (f"E_{n}(x)", lambda p: euler_poly(n, p)),
        "hermite": (f"H_{n}(u)", lambda p: hermite(n, p)),
        "carlitz": (f"H_{{{n},{m}}}(u,v)", lambda p: carlitz_hermite(n, m, p)),
        "zeilberger": (f"H_{{{n},{m}}}(w)", lambda p: zeilberger_hermite(n, m, p)),
    }.get(family, (None, None))
    if family == "power_sum":
        value = power_sum(n, m, "direct")
        other = power_sum(n, m, "bernoulli_formula")
        return _item(f"S_{n}({m})", "pass" if value == other else "fail", value=_render_value(value),
                     cross_check="bernoulli_formula")
    if family == "chen_k":
        return _item(f"K_{n}", "pass", value=_render_value(chen_k(n)))
    if fn is None:
        raise ConfigError(f"unknown family {family!r}")
    value, other = fn(path), fn(_OTHER_PATH[path])
    return _item(label, "pass" if value == other else "fail", value=_render_value(value),
                 path=path, cross_check=_OTHER_PATH[path])


def _verify_items(cfg: RunConfig) -> list:
    bounds = PROFILES[cfg.profile]
    if cfg.order is not None:
        if cfg.order < 1:
            raise ConfigError("--order must be positive")
        bounds = type(bounds)(**{**asdict(bounds), "order": cfg.order})
    try:
        ids = [IdentityId(i) for i in cfg.ids] if cfg.ids else None
    except ValueError as exc:
        raise ConfigError(f"unknown identity id: {exc}") from None
    reports = verify_all(bounds, ids, jobs=cfg.jobs)
    return [r.to_json() for r in reports]


_EXACT_B = {0: 1.0, 1: -0.5, 2: 1 / 6, 3: 0.0, 4: -1 / 30, 5: 0.0, 6: 1 / 42, 7: 0.0, 8: -1 / 30}
_TARGETS = {"L": "LogisticL", "L0": "SechL0", "CompoundHalf": "CompoundHalf", "Laplace": "LaplaceViaGauss"}


def _mc_items(target: str, n: int, count: int, seed: int, ks: bool) -> list:
    if target not in _TARGETS:
        raise ConfigError(f"unknown target {target!r}; choose from {sorted(_TARGETS)}")
    spec = SamplerSpec(_TARGETS[target], seed=seed)
    items = []
    if target in ("L", "L0", "CompoundHalf"):
        # L and (L0+L)/2: E(iX - 1/2)^n = B_n;  L0: 2^n E(iX)^n = E_n
        if target == "L0":
            s = mc_moment(spec, n, 0.0, count)
            scale, exact, name = 2.0**n, float(euler_number(n).re), f"MC E_{n}"
        else:
            s = mc_moment(spec, n, -0.5, count)
            scale, exact, name = 1.0, _EXACT_B[n], f"MC B_{n} ({target})"
        est = s.estimate * scale
        se, se_im = s.std_error * scale, s.std_error_imag * scale
        ok = abs(est.real - exact) <= 5 * se and abs(est.imag) <= 5 * se_im
        items.append(_item(name, "pass" if ok else "fail", estimate=est.real, imag=est.imag,
                           std_error=se, exact=exact, count=count, seed=seed))
    if ks or target == "Laplace":
        items.append(_ks_item(f"KS {spec.target.value}/{spec.construction.value}", spec))
    return items


def _ks_item(name, spec, cdf=None, expect_pass=True):
    r = ks_check(spec, KS_COUNT, cdf=cdf)
    ok = r.passed == expect_pass
    return _item(name, "pass" if ok else "fail", statistic=r.statistic, scaled=r.scaled, cdf=r.cdf,
                 gate_passed=r.passed, expected="pass" if expect_pass else "fail", count=r.count,
                 seed=spec.seed)


def _quad_items(ns) -> list:
    items = []
    for n in ns:
        try:
            v = quad_bernoulli_even(n)
            items.append(_item(f"QUAD B_{2 * n}", "pass", value=v, exact=str(bernoulli_number(2 * n))))
        except Exception as exc:  # reported, not raised
            items.append(_item(f"QUAD B_{2 * n}", "fail", error=str(exc)))
    return items


def _stochastic_suite(seed: int, count: int) -> list:
    items = []
    for n in (2, 3, 4):
        items += _mc_items("L", n, count, seed, False)
    items += _mc_items("L0", 2, count, seed, False)
    for target, construction in [
        ("LogisticL", "log_uniform_ratio"),
        ("LogisticL", "log_exp_ratio"),
        ("SechL0", "log_abs_cauchy"),
        ("SechL0", "log_abs_gauss_ratio"),
        ("CompoundHalf", "average_L0_L"),
    ]:
        spec = SamplerSpec(target, construction, seed)
        items.append(_ks_item(f"KS {target}/{construction}", spec))
    items.append(_ks_item("KS negative control (L vs F_L0)", SamplerSpec("LogisticL", seed=seed), "L0", False))
    return items


def run(cfg: RunConfig) -> dict:
    """Execute ``cfg`` and return the report document."""
    start = time.perf_counter()
    if cfg.command == "compute":
        items = [_compute_item(cfg.family, cfg.n, cfg.m, cfg.path)]
    elif cfg.command == "verify":
        items = _verify_items(cfg)
    elif cfg.command == "mc":
        items = _mc_items(cfg.target, cfg.moment, cfg.count, cfg.seed, cfg.ks)
    elif cfg.command == "quad":
        items = _quad_items([cfg.n] if cfg.n is not None else range(1, 6))
    elif cfg.command == "all":
        items = [_compute_item("bernoulli", k, None, "oracle") for k in range(5)]
        items += [_compute_item("euler", k, None, "oracle") for k in range(5)]
        items += _verify_items(cfg)
        items += _stochastic_suite(cfg.seed, cfg.count)
        items += _quad_items(range(1, 6))
    else:
        raise ConfigError(f"unknown command {cfg.command!r}")
    config = {k: v for k, v in asdict(cfg).items() if k not in ("format", "output")}
    return {
        "version": __version__,
        "config": config,
        "items": items,
        "pass": all(it["status"] == "pass" for it in items),
        "elapsed_ms": round((time.perf_counter() - start) * 1000, 3),
    }


def render_text(report: dict) -> str:
    """Human-readable summary; a function of the JSON document alone."""
    lines = []
    for it in report["items"]:
        d = it["detail"]
        if "value" in d and isinstance(d["value"], (str, dict)):
            v = d["value"]
            v = v if isinstance(v, str) else f"{v['re']} + ({v['im']})*i"
            lines.append(f"{it['id']} = {v}")
        elif "estimate" in d:
            lines.append(f"{it['id']}: {it['status']}  estimate {d['estimate']:.6g} +- {d['std_error']:.2g} (exact {d['exact']:.6g})")
        elif "scaled" in d:
            lines.append(f"{it['id']}: {it['status']}  sqrt(n)*D = {d['scaled']:.4f} against {d['cdf']}, expected {d['expected']}")
        elif "value" in d:
            lines.append(f"{it['id']}: {it['status']}  {d['value']:.12g} (exact {d['exact']})")
        elif "checked" in d:
            extra = ""
            if d.get("counterexample"):
                c = d["counterexample"]
                extra = f"  counterexample {c['params']}: lhs {c['lhs']} rhs {c['rhs']}"
            odd = [w for w in d.get("witnesses", []) if not w["as_expected"]]
            if odd:
                extra += f"  ({len(odd)} witness(es) not as expected)"
            lines.append(f"{it['id']}: {it['status']}  ({d['checked']} checks){extra}")
        else:
            lines.append(f"{it['id']}: {it['status']}  {d}")
    if len(report["items"]) > 1 or report["config"]["command"] != "compute":
        lines.append(f"{'PASS' if report['pass'] else 'FAIL'} ({report['elapsed_ms']:.0f} ms)")
    return "\n".join(lines)


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--output", help="write the report here instead of stdout")
    common.add_argument("--seed", type=int, help="overrides UMBRAL_SEED (default 42)")
    common.add_argument("--count", type=int, default=DEFAULT_COUNT)
    common.add_argument("--order", type=int, help="series truncation order (default: from profile)")
    common.add_argument("--profile", choices=sorted(PROFILES), default="quick")
    common.add_argument("--jobs", type=int, default=1)

    p = argparse.ArgumentParser(prog="umbral", description=__doc__.split("\n\n")[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)
    c = sub.add_parser("compute", parents=[common], help="compute a family value")
    c.add_argument("family", choices=["bernoulli", "euler", "bernoulli_poly", "euler_poly", "hermite",
                                      "carlitz", "zeilberger", "power_sum", "chen_k"])
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--m", type=int)
    c.add_argument("--path", choices=("oracle", "umbral"), default="oracle")
    v = sub.add_parser("verify", parents=[common], help="run the identity suite")
    v.add_argument("--id", dest="ids", action="append", default=[], choices=[i.value for i in REGISTRY])
    m = sub.add_parser("mc", parents=[common], help="Monte Carlo moment check")
    m.add_argument("--target", choices=sorted(_TARGETS), default="L")
    m.add_argument("--moment", type=int, default=2)
    m.add_argument("--ks", action="store_true", help="also run the KS gate at 10^5 draws")
    q = sub.add_parser("quad", parents=[common], help="csch^2 quadrature for B_2n")
    q.add_argument("--n", type=int)
    sub.add_parser("all", parents=[common], help="everything")
    return p


def _seed(flag):
    if flag is not None:
        return flag
    env = os.environ.get("UMBRAL_SEED")
    if env is None:
        return DEFAULT_SEED
    try:
        return int(env)
    except ValueError:
        raise ConfigError(f"UMBRAL_SEED must be an integer, got {env!r}") from None


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)  # exits 2 on bad flags
    try:
        cfg = RunConfig(
            command=args.command,
            family=getattr(args, "family", None),
            n=getattr(args, "n", None),
            m=getattr(args, "m", None),
            path=getattr(args, "path", "oracle"),
            ids=getattr(args, "ids", []),
            profile=args.profile,
            order=args.order,
            jobs=args.jobs,
            target=getattr(args, "target", "L"),
            moment=getattr(args, "moment", 2),
            ks=getattr(args, "ks", False),
            seed=_seed(args.seed),
            count=args.count,
            format=args.format,
            output=args.output,
        )
        if cfg.count < 2:
            raise ConfigError("--count must be > 1")
        report = run(cfg)
    except (ConfigError, ValueError) as exc:
        print(f"umbral: error: {exc}", file=sys.stderr)
        return 2
    text = json.dumps(report, indent=2) if cfg.format == "json" else render_text(report)
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0 if report["pass"] else 1


if __name__ == "__main__":
    sys.exit(main())
