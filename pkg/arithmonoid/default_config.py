import os

DEFAULT_CONFIG = {
    "results_dir": os.getenv("ARITHMONOID_RESULTS_DIR", "./results"),
    # Oracle settings
    "window": int(os.getenv("ARITHMONOID_WINDOW", "2000")),
    "margin_factor": 2,  # margin = margin_factor * max modulus
    # p-adic settings
    "digit_order": os.getenv("ARITHMONOID_DIGIT_ORDER", "msb"),  # Options: msb, lsb
    # Prime used to send bicyclic literals into the arithmetic monoid
    "bicyclic_prime": 2,
    # Randomized checks
    "seed": None,
    "sample_size": 1000,
    "max_modulus": 30,
    # Cantor-point audit grid
    "audit": {
        "primes": [2, 3],
        "a_max": 20,
        "n_max": 200,
    },
}
