// placeholder until the core analysis API lands
