# CLI app
