# Computation modules and service classes
