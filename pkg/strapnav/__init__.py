"""strapnav - strapdown inertial navigation and GNSS fusion toolkit."""

__version__ = "0.1.0"
