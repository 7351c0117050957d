version = "2026/10/18-#01"
# Set to a path such as "cache/results.json" to reuse verify results across runs
cache_file = None

# Number of retained u-coefficients when a command does not ask for an order
default_order = 16
# Truncation orders used by the acceptance suites
acceptance_order = 11
cross_series_order = 9

# Guards against combinatorial blowup
bruteforce_max_degree = 9
ngi_max_n = 4

# Worker processes for `verify --parallel`
num_workers = 3

# Quantization maps the expmap suite runs over, expanded by build_quantizers
map_grid = [
    {"kind": ["sym", "duflo", "duflo-mod", "sym-mod", "npp"]},
]
