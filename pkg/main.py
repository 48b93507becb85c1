"""
Main Application
Command-line interface for the fund style consistency checker.
"""

import argparse
import logging
import os
import sys
from pathlib import Path
from typing import List, Optional

from dotenv import load_dotenv

from exceptions import AnalysisError, InvariantError
from fund_analyzer import FundAnalyzer
from ingest import format_monthly_text, load_series
from report_renderer import ReportRenderer

load_dotenv()

__version__ = "1.0.0"

logger = logging.getLogger("fundstyle")

EXIT_OK = 0
EXIT_INPUT_ERROR = 2
EXIT_INVARIANT_FAILURE = 3
EXIT_INTERRUPTED = 130


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with its four subcommands."""
    parser = argparse.ArgumentParser(
        prog="fundstyle",
        description="Fund style consistency checker - decompose stock prices into trend, "
                    "seasonal and random components and audit fund holdings",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Month-by-month components of one stock
  python main.py decompose data/hdfc_bank_monthly.txt

  # Percentage summary and dominant components as JSON
  python main.py summarize prices/HDFCBANK.csv --format json

  # Audit a fund against the strict bluechip rule table
  python main.py analyze-fund funds/bluechip.json --rules style_rules_strict.json

  # Store daily closes as monthly averages
  python main.py aggregate prices/HDFCBANK.csv --output data/HDFCBANK.txt
        """,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", "-o", help="Write the report to this file instead of stdout")
    common.add_argument("--verbose", "-v", action="store_true", help="Log pipeline steps to stderr")
    common.add_argument("--debug", action="store_true", help="Log debugging detail to stderr")
    common.add_argument("--quiet", "-q", action="store_true", help="Suppress the progress bar")

    rendering = argparse.ArgumentParser(add_help=False)
    rendering.add_argument("--format", "-f", choices=["text", "csv", "json"], default="text",
                           help="Output format (default: text)")
    rendering.add_argument("--full-precision", action="store_true",
                           help="Show decimals in text output instead of rounded integers")
    rendering.add_argument("--period", "-p", type=int, default=None,
                           help="Seasonal period in months, must be even (default: 12)")

    threshold = argparse.ArgumentParser(add_help=False)
    threshold.add_argument("--threshold", "-t", type=float, default=None,
                           help="Dominance threshold in percent (default: 15)")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", parents=[common, rendering],
                       help="Render the trend / seasonal / random table of one stock")
    p.add_argument("price_file", help="Daily price CSV (date,close) or monthly average .txt file")

    p = sub.add_parser("summarize", parents=[common, rendering, threshold],
                       help="Percentage statistics and dominant components of one stock")
    p.add_argument("price_file", help="Daily price CSV (date,close) or monthly average .txt file")

    p = sub.add_parser("analyze-fund", parents=[common, rendering, threshold],
                       help="Check a fund's declared style against its holdings")
    p.add_argument("fund_file", help="Fund definition JSON file")
    p.add_argument("--rules", "-r", default=None, help="Style rules JSON file (default: bundled table)")

    p = sub.add_parser("aggregate", parents=[common],
                       help="Average a daily price CSV into a monthly average text file")
    p.add_argument("price_file", help="Daily price CSV (date,close)")

    return parser


def configure_logging(args: argparse.Namespace) -> None:
    if args.debug:
        level = logging.DEBUG
    elif args.verbose:
        level = logging.INFO
    else:
        level = getattr(logging, os.getenv("LOG_LEVEL", "WARNING").upper(), logging.WARNING)
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )


def cmd_decompose(args: argparse.Namespace) -> str:
    analyzer = FundAnalyzer(period=args.period)
    decomposition = analyzer.decompose_file(args.price_file)
    return ReportRenderer(args.format, args.full_precision).render_decomposition(decomposition)


def cmd_summarize(args: argparse.Namespace) -> str:
    analyzer = FundAnalyzer(threshold=args.threshold, period=args.period)
    stock = analyzer.analyze_stock(args.price_file)
    renderer = ReportRenderer(args.format, args.full_precision)
    return renderer.render_summary(stock.summary, stock.classification, analyzer.threshold)


def cmd_analyze_fund(args: argparse.Namespace) -> str:
    analyzer = FundAnalyzer(
        threshold=args.threshold,
        period=args.period,
        rules_path=args.rules,
        show_progress=not args.quiet and sys.stderr.isatty(),
    )
    analysis = analyzer.analyze_fund(args.fund_file)
    return ReportRenderer(args.format, args.full_precision).render_fund_report(analysis)


def cmd_aggregate(args: argparse.Namespace) -> str:
    return format_monthly_text(load_series(args.price_file))


COMMANDS = {
    "decompose": cmd_decompose,
    "summarize": cmd_summarize,
    "analyze-fund": cmd_analyze_fund,
    "aggregate": cmd_aggregate,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for the CLI application; returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    configure_logging(args)
    logger.info("▶ %s", args.command)

    try:
        rendered = COMMANDS[args.command](args)

        if args.output:
            output = Path(args.output)
            output.parent.mkdir(parents=True, exist_ok=True)
            output.write_text(rendered, encoding="utf-8")
            logger.info("✅ Report saved to %s", output)
        else:
            sys.stdout.write(rendered)
        return EXIT_OK

    except (AnalysisError, OSError) as e:
        print(f"❌ Error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except InvariantError as e:
        print(f"❌ Internal check failed: {e}", file=sys.stderr)
        return EXIT_INVARIANT_FAILURE
    except KeyboardInterrupt:
        print("\n⚠️  Process interrupted by user", file=sys.stderr)
        return EXIT_INTERRUPTED


if __name__ == "__main__":
    sys.exit(main())
