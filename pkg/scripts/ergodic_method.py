"""Distance between elementary measures on shape_sequence(theta, N) and the Thoma measure."""

from dataclasses import dataclass

from _config import describe, parse_config

from bratteli import ThomaParameter, ergodic_method_compare, is_nonincreasing, shape_sequence


@dataclass
class Config:
    alpha: str = "1/2,1/2"
    beta: str = ""
    n_min: int = 2
    n_max: int = 24
    step: int = 2
    level: int = 2


def main(cfg: Config) -> None:
    theta = ThomaParameter.parse(cfg.alpha, cfg.beta)
    Ns = list(range(max(cfg.n_min, cfg.level), cfg.n_max + 1, cfg.step))
    rows = ergodic_method_compare(theta, Ns, cfg.level)
    print(f"# {describe(cfg)}")
    print(f"{'N':>4}  {'shape':<24} {'distance':>10}  decimal")
    for N, d in rows:
        print(f"{N:>4}  {str(shape_sequence(theta, N)):<24} {str(d):>10}  {float(d):.6f}")
    print(f"non-increasing within slack: {is_nonincreasing(rows)}")


if __name__ == "__main__":
    main(parse_config(Config, __doc__))
