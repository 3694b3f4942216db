# Permutation codes app
