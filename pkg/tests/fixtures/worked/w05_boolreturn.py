def positive(n):
    if n > 0:
        return True
    else:
        return False


def negative(n):
    return bool(n < 0)
