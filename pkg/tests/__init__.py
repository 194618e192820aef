# -*- coding: utf-8 -*-
# Copyright: See the LICENSE file.
