"""Pairwise level-n distances between Thoma measures, for increasing n."""

from dataclasses import dataclass

from _config import describe, parse_config

from bratteli import ThomaParameter, boundary_separation


@dataclass
class Config:
    alphas: str = "0;1;1/2,1/2;1/2"
    betas: str = ";;;1/2"
    max_level: int = 8


def main(cfg: Config) -> None:
    alphas = cfg.alphas.split(";")
    betas = cfg.betas.split(";") if cfg.betas else [""] * len(alphas)
    thetas = [ThomaParameter.parse(a, b) for a, b in zip(alphas, betas)]
    pairs = [(a, b) for a in range(len(thetas)) for b in range(a + 1, len(thetas))]
    print(f"# {describe(cfg)}")
    for i, t in enumerate(thetas):
        print(f"# [{i}] {t}")
    print("n  " + "  ".join(f"{a}-{b}".rjust(9) for a, b in pairs))
    for n in range(1, cfg.max_level + 1):
        table = boundary_separation(thetas, n)
        print(f"{n:<2} " + "  ".join(f"{float(table[a][b]):9.6f}" for a, b in pairs))


if __name__ == "__main__":
    main(parse_config(Config, __doc__))
