from dotenv import load_dotenv

# Load environment variables from .env file before DEFAULT_CONFIG reads them
load_dotenv()

from arithmonoid.arith import compose_all, dagger_generator, factor_into_prime_generators, generator
from arithmonoid.config import set_config
from arithmonoid.default_config import DEFAULT_CONFIG
from arithmonoid.oracle import check_chain
from arithmonoid.padic import audit_cantor_corollary, norm_via_polycyclic, summarize_audit

# Create a custom config
config = DEFAULT_CONFIG.copy()
config["window"] = 500  # Smaller oracle window
config["digit_order"] = "lsb"  # Options: msb, lsb
config["audit"] = {"primes": [2], "a_max": 8, "n_max": 64}

# Initialize with custom config
set_config(config)

# R‡(3,1) R(2,0) R‡(4,2) R(5,0), rightmost factor first
factors = [dagger_generator(3, 1), generator(2, 0), dagger_generator(4, 2), generator(5, 0)]
composite = compose_all(factors)
print(composite)

# Check the symbolic composite against brute-force composition
report = check_chain(factors)
print(f"oracle ok: {report.ok} (margin {report.margin})")

print(factor_into_prime_generators(60, 37))
print(norm_via_polycyclic(2, 48))

# Compare Cantor-point evaluation with p-adic distance
print(summarize_audit(audit_cantor_corollary()))
