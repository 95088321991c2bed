import argparse

from reward import RewardVariant, reward_curve
from schemas.configuration import PipelineConfig

from commands.common import Subparsers, write_jsonl


def _variants(value: str) -> list[RewardVariant]:
    try:
        return [RewardVariant(name) for name in value.split(",") if name.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _points(value: str) -> int:
    number = int(value)
    if number < 2:
        msg = "a curve needs at least 2 points"
        raise argparse.ArgumentTypeError(msg)
    return number


def register(subparsers: Subparsers) -> None:
    parser = subparsers.add_parser(
        "reward-curve",
        help="Tabulate the emotion reward of each variant over polarity in [-1, 1].",
    )
    parser.add_argument(
        "--variants",
        type=_variants,
        default=[variant for variant in RewardVariant if variant != RewardVariant.NONE],
        help="Comma-separated reward variants, defaults to the four sigmoid variants.",
    )
    parser.add_argument("--points", type=_points, default=21)
    parser.set_defaults(handler=run)


def run(arguments: argparse.Namespace, _: PipelineConfig) -> None:
    write_jsonl(reward_curve(arguments.variants, arguments.points))
