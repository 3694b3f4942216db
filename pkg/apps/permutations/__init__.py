# Permutations app
