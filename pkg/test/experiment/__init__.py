#!/usr/bin/env python3

# Copyright (c) The spinchain authors. All Rights Reserved
