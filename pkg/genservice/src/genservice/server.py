"""Command-line entry point: configure and serve the app with uvicorn."""
from __future__ import annotations

import argparse
import sys

import uvicorn

from .app import create_app
from .config import ServiceConfig
from .model import Seq2SeqNegator


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genservice",
        description="Serve a seq2seq negation model over the /negate protocol. "
                    "Flags override GENSERVICE_* environment variables.",
    )
    parser.add_argument("--host", default=None)
    parser.add_argument("--port", type=int, default=None)
    parser.add_argument("--model", default=None,
                        help="model identifier or checkpoint path")
    parser.add_argument("--max-batch-size", type=int, default=None)
    parser.add_argument("--timeout", type=float, default=None,
                        help="per-request generation timeout in seconds")
    parser.add_argument("--max-input-length", type=int, default=None)
    parser.add_argument("--max-new-tokens", type=int, default=None)
    parser.add_argument("--sample", action="store_true",
                        help="sample instead of greedy decoding")
    parser.add_argument("--seed", type=int, default=None)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    config = ServiceConfig.from_env(
        host=args.host,
        port=args.port,
        model=args.model,
        max_batch_size=args.max_batch_size,
        request_timeout=args.timeout,
        max_input_length=args.max_input_length,
        max_new_tokens=args.max_new_tokens,
        do_sample=True if args.sample else None,
        seed=args.seed,
    )
    if not config.model:
        print("error: no model configured (--model or GENSERVICE_MODEL)",
              file=sys.stderr)
        return 2
    # load before serving so a bad checkpoint is a startup failure, not a
    # permanently unhealthy server
    try:
        negator = Seq2SeqNegator(config)
    except Exception as exc:
        print(f"error: failed to load model: {exc}", file=sys.stderr)
        return 1
    app = create_app(config, negator=negator)
    uvicorn.run(app, host=config.host, port=config.port, log_level="info")
    return 0


if __name__ == "__main__":
    sys.exit(main())
