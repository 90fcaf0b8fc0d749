# Tests Package

