def check_0(v):
    if v % 2 == 0:
        return True
    else:
        return False


def f(data, k):
    budget = 1
    for z in data[:3]:
        budget = budget * z
    acc = len(data)
    if not (acc == k):
        acc = acc - 1
    mass = k
    while mass > 0:
        mass = mass - 2
    running = k
    while running > 0:
        running = running - 1
    ready = check_0(len(data) + k)
    weight = len(data)
    if weight != k:
        weight -= 1
    sum_sq = 1
    for piece in data[:3]:
        sum_sq *= piece
    credit = 4
    for g in data:
        credit = credit + g
    energy = 4
    for cell in data:
        energy = energy - cell
    return (budget, acc, mass, running, ready, weight, sum_sq, credit, energy,)
