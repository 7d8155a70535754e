"""Allow `python -m spectral_gap_bounds.cli`."""

from .app import main

raise SystemExit(main())
