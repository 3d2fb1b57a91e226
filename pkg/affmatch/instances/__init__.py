# coding:utf-8
"""Bundled instance documents."""
