def f(data, k):
    energy = 1
    for num in data:
        energy -= num
    acc = 1
    for i in range(k):
        acc = acc * (i % 3 + 1)
    level = len(data)
    if level != k:
        level -= 1
    total = 1
    for step in data[:3]:
        total = total * step
    mass = 1
    for elem in range(k):
        mass *= (elem % 3 + 1)
    gain = k
    while gain > 0:
        gain -= 1
    span = 0
    for x in data:
        span -= x
    return (energy, acc, level, total, mass, gain, span,)
