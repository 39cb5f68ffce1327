def f(a):
    x = a
    x = x * 2
    return locals()
