"""Print the results of the small worked stream examples."""
import math

import funstream as fs
from funstream.functional import add5, apply_to_minus_nine, apply_to_seven, clamp_or_scale, mult_by_3_if_positive

WORDS = ["bat", "cat", "bird", "mad", "catch", "ditch"]
FOOD = ["apple", "banana", "bagel"]

print("applyToSeven(add5)               ", apply_to_seven(add5))
print("applyToSeven(multBy3IfPositive)  ", apply_to_seven(mult_by_3_if_positive))
print("applyToMinusNine(add5)           ", apply_to_minus_nine(add5))
print("applyToMinusNine(multBy3...)     ", apply_to_minus_nine(mult_by_3_if_positive))
print("potato%4 + potato^2 at 7         ", apply_to_seven(lambda p: p % 4 + p * p))
print("factorial(oak+12) * oak at -9    ", apply_to_minus_nine(lambda oak: math.factorial(oak + 12) * oak))
print("(x+1)(x+2) at -9                 ", apply_to_minus_nine(lambda x: (x + 1) * (x + 2)))
print("piecewise at -9                  ", apply_to_minus_nine(clamp_or_scale))
print()
print("count of 3 words                 ", fs.of("bat", "cat", "bird").count())
print("sum 1.5, 2.4, -0.1               ", fs.of_numbers(1.5, 2.4, -0.1).sum())
print("words starting with 'ca'         ", fs.of(*WORDS).filter(lambda w: w.startswith("ca")).count())
print("sum 27..159                      ", fs.range_closed(27, 159).sum())
print("sum of odd 27..159               ", fs.range_closed(27, 159).filter(lambda x: x % 2 == 1).sum())
print("first letters                    ", fs.of(*FOOD).reduce("", lambda r, e: r + e[0]))
print()
fs.of(*FOOD).for_each(print)
fs.of(*FOOD).map(lambda w: w.upper() + "****").for_each(lambda s: print(s, end=""))
print()
fs.of(*FOOD).map_to_int(lambda w: w.find("e")).for_each(print)
