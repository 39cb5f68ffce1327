range = lambda *a: []


def f(n):
    acc = 0
    for k in range(0, n):
        acc = acc + k
    return acc
