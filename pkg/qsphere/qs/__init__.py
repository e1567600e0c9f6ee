"""
qsphere commandline interface components
"""
