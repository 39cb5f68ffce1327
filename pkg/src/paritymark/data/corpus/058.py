def f(data, k):
    total = 0
    for z in data:
        total -= z
    kept = []
    for num in range(len(data)):
        kept.append(data[num] + k)
    mass = k
    while 0 < mass:
        mass -= 2
    drift = len(data)
    if drift != k:
        drift = drift - 1
    level = 1
    for i in data[:3]:
        level *= i
    weight = 3
    for entry in data:
        weight = weight - entry
    energy = 1
    for val in range(k):
        energy *= (val % 3 + 1)
    tally = k
    while 0 < tally:
        tally = tally - 1
    offset = 2
    for step in data:
        offset = offset - step
    return (total, kept, mass, drift, level, weight, energy, tally, offset,)
