#!/usr/bin/env python3
"""
Entry point for the poset-metrics command line
"""

if __name__ == "__main__":
    import sys

    sys.path.insert(0, "src")
    from poset_metrics.cli.main import main
    sys.exit(main())
