# coding:utf-8
from affmatch._cli import main

raise SystemExit(main())
