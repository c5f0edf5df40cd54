"""Flat ``key = value`` config files for the generator and the tuner.

Blank lines and ``#`` comments are ignored. Ranges are written ``lo-hi``,
lists comma-separated, and generator groups as ``label:count:p`` items::

    # synth
    mu_c = 2.5
    years = 2020-2024
    groups = small-only:800:1.0, mixed:100:0.7, large-only:100:0.0
"""

from __future__ import annotations

from dataclasses import fields
from pathlib import Path

from .synth import GroupSpec, SynthConfig
from .tuner import TunerConfig


class ConfigError(ValueError):
    pass


def parse_kv(text: str) -> dict[str, str]:
    out = {}
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {n}: expected key = value, got {raw!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        if not key:
            raise ConfigError(f"line {n}: empty key")
        out[key] = value
    return out


def _range(value: str) -> tuple[int, int]:
    lo, sep, hi = value.partition("-")
    if not sep:
        raise ConfigError(f"expected a range lo-hi, got {value!r}")
    return int(lo), int(hi)


def _list(value: str) -> list[str]:
    return [v.strip() for v in value.split(",") if v.strip()]


def _groups(value: str) -> tuple[GroupSpec, ...]:
    out = []
    for item in _list(value):
        try:
            label, count, p = item.split(":")
            out.append(GroupSpec(label.strip(), int(count), float(p)))
        except ValueError as exc:
            raise ConfigError(f"bad group spec {item!r} ({exc})") from None
    return tuple(out)


def _build(cls, values: dict[str, str], converters: dict):
    known = {f.name: f for f in fields(cls)}
    kwargs = {}
    for key, raw in values.items():
        if key not in known:
            raise ConfigError(f"unknown {cls.__name__} key {key!r}")
        conv = converters.get(key)
        if conv is None:
            default = known[key].default
            conv = type(default) if isinstance(default, (int, float, str)) else str
        try:
            kwargs[key] = conv(raw)
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"{key}: {exc}") from None
    try:
        return cls(**kwargs)
    except (TypeError, ValueError) as exc:
        raise ConfigError(str(exc)) from None


def synth_config_from_text(text: str) -> SynthConfig:
    return _build(SynthConfig, parse_kv(text), {"years": _range, "papers_range": _range, "groups": _groups})


def tuner_config_from_text(text: str) -> TunerConfig:
    converters = {
        "alpha_grid": lambda v: tuple(float(a) for a in _list(v)),
        "penalty_grid": lambda v: tuple(_list(v)),
        "norm_grid": lambda v: tuple(_list(v)),
    }
    return _build(TunerConfig, parse_kv(text), converters)


def load_synth_config(path: str | Path) -> SynthConfig:
    return synth_config_from_text(Path(path).read_text(encoding="utf-8"))


def load_tuner_config(path: str | Path) -> TunerConfig:
    return tuner_config_from_text(Path(path).read_text(encoding="utf-8"))


def synth_config_to_text(config: SynthConfig) -> str:
    lines = []
    for f in fields(SynthConfig):
        value = getattr(config, f.name)
        if f.name in ("years", "papers_range"):
            value = f"{value[0]}-{value[1]}"
        elif f.name == "groups":
            value = ", ".join(f"{g.label}:{g.count}:{g.mix_p:g}" for g in value)
        lines.append(f"{f.name} = {value}")
    return "\n".join(lines) + "\n"
