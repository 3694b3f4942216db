# Verification harness app
