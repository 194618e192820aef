# -*- coding: utf-8 -*-
# Copyright: See the LICENSE file.

import sys

from .cli import main

sys.exit(main())
