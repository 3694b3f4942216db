# Statistics app
