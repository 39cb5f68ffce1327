def check_0(v):
    return bool(v % 2 == 1)


def f(data, k):
    mass = 1
    for x in data:
        mass += x
    full = check_0(len(data) + k)
    return (mass, full,)
