# Han bijection app
