def evens(data):
    picked = [v for v in data]
    return picked
