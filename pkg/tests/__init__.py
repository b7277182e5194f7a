# prodgraph test suite
