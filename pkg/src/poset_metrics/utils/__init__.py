"""Utils Module - Utility functions and helpers"""
import logging
import sys

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def configure_logging(level: str = "WARNING") -> None:
    """Process-wide logging on stderr so stdout stays byte-stable"""
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format=LOG_FORMAT,
        stream=sys.stderr,
        force=True,
    )


__all__ = ["LOG_FORMAT", "configure_logging"]
