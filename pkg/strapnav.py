#!/usr/bin/env python3
"""
strapnav - strapdown INS/GNSS toolkit

Usage:
    python strapnav.py sim --traj traj.cfg --err err.cfg --gnss gnss.cfg -o data/
    python strapnav.py run --filter eskf -i data/ -o out/eskf
    python strapnav.py compare out/ins out/eskf
"""

from strapnav.cli import main

if __name__ == "__main__":
    main()
