# Copyright (c) 2026, the rankdescent authors
# All rights reserved.  See LICENSE for the terms (3-clause BSD).

from rankdescent.commands.main import main

main()
