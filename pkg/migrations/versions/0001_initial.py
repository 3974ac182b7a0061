"""verification run archive

Revision ID: 0001_initial
Revises: 
Create Date: 2026-10-19
"""
from alembic import op
import sqlalchemy as sa

revision = '0001_initial'
down_revision = None
branch_labels = None
depends_on = None

def upgrade():
    op.create_table(
        'verification_run',
        sa.Column('id', sa.Integer(), primary_key=True),
        sa.Column('check_name', sa.String(length=80), nullable=False),
        sa.Column('parameters', sa.Text()),
        sa.Column('instances_tested', sa.Integer()),
        sa.Column('violation_count', sa.Integer()),
        sa.Column('elapsed', sa.Float()),
        sa.Column('passed', sa.Boolean()),
        sa.Column('created_at', sa.DateTime(), nullable=True),
    )
    op.create_table(
        'violation_record',
        sa.Column('id', sa.Integer(), primary_key=True),
        sa.Column('run_id', sa.Integer(), sa.ForeignKey('verification_run.id'), nullable=False),
        sa.Column('instance_key', sa.Text(), nullable=False),
        sa.Column('witness', sa.Text()),
    )

def downgrade():
    op.drop_table('violation_record')
    op.drop_table('verification_run')
