from ks2.cli import main

raise SystemExit(main())
