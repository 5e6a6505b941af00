"""Tiny helper: expose a dataclass config as command-line flags."""

import argparse
from dataclasses import asdict, fields


def parse_config(cls, description: str):
    parser = argparse.ArgumentParser(description=description)
    for f in fields(cls):
        parser.add_argument(f"--{f.name.replace('_', '-')}", type=type(f.default), default=f.default)
    return cls(**vars(parser.parse_args()))


def describe(cfg) -> str:
    return " ".join(f"{k}={v}" for k, v in asdict(cfg).items())
