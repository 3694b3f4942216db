# Foata transformation app
