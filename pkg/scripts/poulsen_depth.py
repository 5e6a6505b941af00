"""Best periodic-orbit approximation of a Bernoulli target, by depth and cylinder level."""

from dataclasses import dataclass
from fractions import Fraction

from _config import describe, parse_config

from bratteli import bernoulli_measure, solvable_group_graph
from bratteli.diagnostics import best_ergodic_witness, best_mixture_witness


@dataclass
class Config:
    p: str = "1/2"
    max_level: int = 3
    max_depth: int = 4


def main(cfg: Config) -> None:
    target = bernoulli_measure(solvable_group_graph(cfg.max_level), Fraction(cfg.p))
    print(f"# {describe(cfg)}")
    print("level depth   single-orbit  mixture")
    for k in range(1, cfg.max_level + 1):
        for m in range(k, cfg.max_depth + 1):
            _, single = best_ergodic_witness(target, k, m)
            _, mixed = best_mixture_witness(target, k, m)
            print(f"{k:>5} {m:>5}   {str(single):>12}  {str(mixed):>7}")


if __name__ == "__main__":
    main(parse_config(Config, __doc__))
