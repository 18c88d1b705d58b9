"""
Solving the word problem in circular groups
===========================================

G(n, m) has generators a1..an and says that every cyclic window of m
consecutive generators has the same value D. Words are compared by
bringing them to a greedy normal form D^p s1 s2 ... sk.
"""

from torusnecklace.garside import CircularParams, ball_word, circular_group, positive_ball
from torusnecklace.words import Word

g = circular_group(CircularParams(2, 3))

# the defining relation a1 a2 a1 = a2 a1 a2 makes both sides equal to D
print(g.normal_form(Word.parse("a1.a2.a1")))
print(g.normal_form(Word.parse("a2.a1.a2")))

# inverses are pushed left as negative powers of D
print(g.normal_form(Word.parse("a1^-1")))

# conjugating by D shifts generator indices by m
print(g.equal(Word.parse("a1.a1.a2.a1"), Word.parse("a1.a2.a1.a2")))

# the brute-force ball of positive words is an independent check
classes = positive_ball(CircularParams(2, 3), 3)
print(len(classes), "classes of positive words of length <= 3")
for cls in classes:
    if len(cls) > 1:
        print("merged:", [str(ball_word(CircularParams(2, 3), w)) for w in cls])

# the center is generated by (a1 ... an)^(m / gcd(n, m))
g46 = circular_group(CircularParams(4, 6))
alpha = Word.parse("a1.a2.a3.a4")
print("alpha^3 central in G(4,6):", g46.is_central(alpha ** 3))
print("alpha central in G(4,6):", g46.is_central(alpha))
