"""Words and substitution rules: matrices, primitivity, fixed-point seeds.

Run with: python3 demos/01_substitutions.py
"""

from subtiling import cli, words

fib = cli.corpus_lookup("fibonacci")
sub = fib.substitution()

print("rules:", {t: " ".join(r) for t, r in zip(fib.letters, fib.rules)})

matrix = words.substitution_matrix(sub)
print("substitution matrix (entry i,j counts letter i in the image of j):")
for row in matrix:
    print("  ", row)

print("primitive:", words.is_primitive(matrix))

print("iterates of 'a':")
for n in range(5):
    word = sub.iterate(1, n)
    print(f"  n={n}: {''.join(fib.token(c) for c in word)}")

print("letter counts of the 5th iterate:",
      words.abelianization(sub.iterate(1, 5), sub.size))

k, left, right = words.fixed_point_seed(sub)
print(f"two-sided seed: power {k}, junction "
      f"{fib.token(left)}|{fib.token(right)}")

# the four-letter extension swaps cases; the swap commutes with the rules
fib2 = cli.corpus_lookup("fib2").substitution()
print("case-swap involutions of fib2:",
      words.commuting_fixed_point_free_involutions(fib2))
