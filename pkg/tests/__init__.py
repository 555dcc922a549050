"""
测试包

book-embed 的单元测试与命令行测试。
"""
