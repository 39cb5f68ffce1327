def f(data, k):
    return (k, (max(data) if data else k) + 2,)
