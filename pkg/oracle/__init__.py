from oracle.brute import oracle_count_by_size, oracle_cyclic_subsets  # noqa: F401
