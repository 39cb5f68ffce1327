class Bag:
    items = []
    for v in (1, 2):
        items.append(v)

    def size(self):
        n = 0
        for it in self.items:
            n = n + 1
        return n
