def f(a, b):
    x = 0
    x = x + a
    x -= b
    return x
